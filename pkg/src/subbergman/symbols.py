"""Analytic symbols of the unit ball of H-infinity and their power series.

Supported closed forms: Moebius maps zeta (a-z)/(1-conj(a) z), finite
Blaschke products, scaled monomials c z^n, and the atomic singular inner
function exp(c (z+1)/(z-1)). Every symbol converts to a truncated Taylor
series (PowerSeriesSymbol), which is the representation the operator and
kernel modules consume.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scalars import WeightParameter, as_weight, binomial_coeffs


def _unimodular(zeta: complex) -> complex:
    m = abs(zeta)
    if abs(m - 1.0) > 1e-12:
        raise ValueError(f"zeta must be unimodular, got |zeta| = {m}")
    # renormalize exactly so inner-function invariants stay exact
    return zeta / m


@dataclass(frozen=True)
class MobiusSpec:
    """Disk automorphism zeta (a-z)/(1-conj(a) z) swapping 0 and a."""

    a: complex
    zeta: complex = 1.0

    def __post_init__(self) -> None:
        if abs(self.a) >= 1:
            raise ValueError(f"Moebius base point must satisfy |a| < 1, got {self.a}")
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "zeta", _unimodular(complex(self.zeta)))


@dataclass(frozen=True)
class BlaschkeSpec:
    """Finite Blaschke product: zeta times Moebius factors at the given zeros."""

    zeros: tuple[complex, ...]
    zeta: complex = 1.0

    def __post_init__(self) -> None:
        zeros = tuple(complex(z) for z in self.zeros)
        if len(zeros) < 1:
            raise ValueError("Blaschke product needs at least one zero")
        if any(abs(z) >= 1 for z in zeros):
            raise ValueError("every Blaschke zero must lie inside the disk")
        object.__setattr__(self, "zeros", zeros)
        object.__setattr__(self, "zeta", _unimodular(complex(self.zeta)))

    @property
    def degree(self) -> int:
        return len(self.zeros)


@dataclass(frozen=True)
class MonomialSpec:
    """Scaled monomial c z^n. c = None defers the scale choice to the caller.

    The deferred scale resolves, per weight parameter, to the largest value
    keeping the sub-Bergman kernel positive for -2 < alpha < -1 (see
    monomial_cnp_scale) and to 1 otherwise.
    """

    n: int
    c: complex | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("monomial degree must be >= 1")
        if self.c is not None:
            c = complex(self.c)
            if abs(c) > 1 + 1e-12:
                raise ValueError(f"monomial scale must satisfy |c| <= 1, got {c}")
            object.__setattr__(self, "c", c)


@dataclass(frozen=True)
class SingularInnerSpec:
    """Atomic singular inner function exp(c (z+1)/(z-1)) with mass c > 0."""

    c: float

    def __post_init__(self) -> None:
        if self.c <= 0:
            raise ValueError("singular inner mass must be positive")


@dataclass(frozen=True)
class PowerSeriesSymbol:
    """Truncated Taylor coefficients c_0..c_L of an analytic symbol.

    tail_bound bounds the magnitude of every discarded coefficient, so
    evaluation at |z| <= r < 1 deviates from the represented function by at
    most tail_bound * r^(L+1) / (1-r). For rational symbols tail_bound is
    the full discarded l1 mass (geometrically exact); for singular inner
    symbols, whose coefficient tails are not absolutely summable, it is the
    unit-ball coefficient bound 1.
    """

    coeffs: np.ndarray
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or len(c) == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)) or not np.isfinite(self.tail_bound) or self.tail_bound < 0:
            raise ValueError("coefficients and tail bound must be finite, tail bound >= 0")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "tail_bound", float(self.tail_bound))

    def __len__(self) -> int:
        return len(self.coeffs)

    def eval(self, z):
        """Horner evaluation at one or many points strictly inside the disk."""
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) >= 1):
            raise ValueError("evaluation point must satisfy |z| < 1")
        out = np.zeros_like(z)
        for c in self.coeffs[::-1]:
            out = out * z + c
        return complex(out) if out.ndim == 0 else out


SymbolSpec = MobiusSpec | BlaschkeSpec | MonomialSpec | SingularInnerSpec


def _mobius_factor_coeffs(a: complex, length: int) -> np.ndarray:
    # (a-z)/(1-conj(a) z) = a + sum_{k>=1} conj(a)^(k-1) (|a|^2-1) z^k
    c = np.zeros(length, dtype=complex)
    c[0] = a
    if length > 1:
        k = np.arange(1, length)
        c[1:] = np.conj(a) ** (k - 1) * (abs(a) ** 2 - 1.0)
    return c

def _mobius_factor_tail(a: complex, length: int) -> float:
    # sum_{k>=L} |a|^(k-1) (1-|a|^2) = (1+|a|) |a|^(L-1), with 0^0 = 1
    r = abs(a)
    if length >= 2 and r == 0.0:
        return 0.0
    return (1.0 + r) * r ** (length - 1)


def to_series(spec: SymbolSpec | PowerSeriesSymbol, length: int) -> PowerSeriesSymbol:
    """First `length` Taylor coefficients of the symbol, with a tail bound.

    Products of Moebius factors are formed by exact polynomial convolution
    truncated to `length`; the discarded convolution mass and the factors'
    geometric tails are accumulated into tail_bound.
    """
    if length < 1:
        raise ValueError("series length must be >= 1")
    if isinstance(spec, PowerSeriesSymbol):
        if length >= len(spec):
            c = np.zeros(length, dtype=complex)
            c[: len(spec)] = spec.coeffs
            return PowerSeriesSymbol(c, spec.tail_bound)
        dropped = float(np.abs(spec.coeffs[length:]).sum())
        return PowerSeriesSymbol(spec.coeffs[:length], spec.tail_bound + dropped)
    if isinstance(spec, MobiusSpec):
        return PowerSeriesSymbol(
            spec.zeta * _mobius_factor_coeffs(spec.a, length),
            _mobius_factor_tail(spec.a, length),
        )
    if isinstance(spec, BlaschkeSpec):
        prod = np.zeros(length, dtype=complex)
        prod[0] = 1.0
        tail = 0.0
        for a in spec.zeros:
            f = _mobius_factor_coeffs(a, length)
            tf = _mobius_factor_tail(a, length)
            absprod = np.convolve(np.abs(prod), np.abs(f))
            cross = float(np.abs(prod).sum()) * tf + tail * (float(np.abs(f).sum()) + tf)
            tail = float(absprod[length:].sum()) + cross
            prod = np.convolve(prod, f)[:length]
        return PowerSeriesSymbol(spec.zeta * prod, tail)
    if isinstance(spec, MonomialSpec):
        if spec.c is None:
            raise ValueError("monomial scale is unresolved; call resolve_monomial first")
        c = np.zeros(length, dtype=complex)
        if spec.n < length:
            c[spec.n] = spec.c
            return PowerSeriesSymbol(c, 0.0)
        return PowerSeriesSymbol(c, abs(spec.c))
    if isinstance(spec, SingularInnerSpec):
        # exp(c (z+1)/(z-1)) = e^{-c} exp(u) with u = -2c z/(1-z);
        # h_n = (1/n) sum_k k u_k h_{n-k} is the power-series exponential.
        h = np.zeros(length)
        h[0] = 1.0
        for n in range(1, length):
            h[n] = (-2.0 * spec.c / n) * float(np.dot(np.arange(1, n + 1), h[n - 1 :: -1]))
        return PowerSeriesSymbol(np.exp(-spec.c) * h.astype(complex), 1.0)
    raise TypeError(f"unsupported symbol spec {type(spec).__name__}")


def default_series_length(spec: SymbolSpec | PowerSeriesSymbol) -> int:
    """Truncation length leaving the tail below downstream tolerances.

    Rational symbols decay geometrically at rate max |a_i|; singular inner
    coefficients decay slowly, so those symbols get a long fixed length.
    """
    if isinstance(spec, PowerSeriesSymbol):
        return len(spec)
    if isinstance(spec, MonomialSpec):
        return max(spec.n + 1, 8)
    if isinstance(spec, SingularInnerSpec):
        return 600
    zeros = spec.zeros if isinstance(spec, BlaschkeSpec) else (spec.a,)
    rho = max(abs(z) for z in zeros)
    if rho < 1e-12:
        return max(len(zeros) + 1, 8)
    need = int(np.ceil(np.log(1e-14) / np.log(rho))) + len(zeros)
    return int(min(max(need, 64), 1024))


def eval_exact(spec: SymbolSpec | PowerSeriesSymbol, z):
    """Closed-form evaluation, the oracle the series representation is tested against."""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1):
        raise ValueError("evaluation point must satisfy |z| < 1")
    if isinstance(spec, PowerSeriesSymbol):
        return spec.eval(z)
    if isinstance(spec, MobiusSpec):
        out = spec.zeta * (spec.a - z) / (1.0 - np.conj(spec.a) * z)
    elif isinstance(spec, BlaschkeSpec):
        out = np.full_like(z, spec.zeta)
        for a in spec.zeros:
            out = out * (a - z) / (1.0 - np.conj(a) * z)
    elif isinstance(spec, MonomialSpec):
        if spec.c is None:
            raise ValueError("monomial scale is unresolved; call resolve_monomial first")
        out = spec.c * z**spec.n
    elif isinstance(spec, SingularInnerSpec):
        out = np.exp(spec.c * (z + 1.0) / (z - 1.0))
    else:
        raise TypeError(f"unsupported symbol spec {type(spec).__name__}")
    return complex(out) if out.ndim == 0 else out


def monomial_cnp_scale(n: int, alpha: WeightParameter | float) -> float:
    """Largest scale c for which c z^n has a positive sub-Bergman kernel, -2 < alpha < -1.

    c^2 equals minus the n-th Taylor coefficient of (1-x)^(alpha+2): the
    scaled monomial then cancels that term exactly, leaving a series with
    nonnegative coefficients.
    """
    a = as_weight(alpha).alpha
    if not -2 < a < -1:
        raise ValueError(f"the scaled-monomial construction needs -2 < alpha < -1, got {a}")
    if n < 1:
        raise ValueError("monomial degree must be >= 1")
    return float(np.sqrt(-binomial_coeffs(a + 2.0, n).coeffs[n]))


def resolve_monomial(spec: MonomialSpec, alpha: WeightParameter | float) -> MonomialSpec:
    """Fill in a deferred monomial scale for the given weight parameter."""
    if spec.c is not None:
        return spec
    a = as_weight(alpha).alpha
    c = monomial_cnp_scale(spec.n, a) if -2 < a < -1 else 1.0
    return MonomialSpec(n=spec.n, c=c)


@dataclass(frozen=True)
class Normalization:
    """Outcome of moving the base point to 0: psi = phi_a o phi with a = phi(0).

    The scalar factor g(z) = sqrt(1-|a|^2)/(1-conj(a) phi(z)) rescales the
    sub-Bergman kernel of phi into that of psi.
    """

    psi: PowerSeriesSymbol
    base_point: complex
    source: PowerSeriesSymbol

    def g(self, z):
        if self.base_point == 0:
            z = np.asarray(z, dtype=complex)
            out = np.ones_like(z)
            return complex(out) if out.ndim == 0 else out
        a = self.base_point
        return np.sqrt(1.0 - abs(a) ** 2) / (1.0 - np.conj(a) * self.source.eval(z))


def _reciprocal_series(d: np.ndarray, length: int) -> np.ndarray:
    # coefficients of 1/d(z) up to degree length-1; d_0 must be nonzero
    inv = np.zeros(length, dtype=complex)
    inv[0] = 1.0 / d[0]
    for k in range(1, length):
        m = min(k, len(d) - 1)
        j = np.arange(1, m + 1)
        inv[k] = -np.dot(d[j], inv[k - j]) / d[0]
    return inv


def normalize(symbol: PowerSeriesSymbol) -> Normalization:
    """Compose with the Moebius map at a = phi(0) so the result vanishes at 0.

    The composition (a - phi)/(1 - conj(a) phi) is computed by series
    division at the input length; coefficients below the truncation are
    exact, and the tail keeps the unit-ball bound 1. When a = 0 the symbol
    is returned unchanged (the Moebius factor is then -z, and every kernel
    built from the symbol is invariant under the sign flip), which makes
    normalization idempotent.
    """
    a = symbol.coeffs[0]
    if abs(a) >= 1:
        raise ValueError(f"cannot normalize a symbol with |phi(0)| >= 1, got phi(0) = {a}")
    if abs(a) < 1e-15:
        return Normalization(psi=symbol, base_point=0.0 + 0.0j, source=symbol)
    length = len(symbol)
    num = -symbol.coeffs.copy()
    num[0] += a  # exactly zero constant term
    den = -np.conj(a) * symbol.coeffs
    den[0] += 1.0
    psi = np.convolve(num, _reciprocal_series(den, length))[:length]
    # constant input gives psi identically zero; otherwise psi is a genuine
    # infinite series and keeps the unit-ball coefficient bound
    tail = 0.0 if float(np.abs(psi).sum()) == 0.0 else 1.0
    return Normalization(psi=PowerSeriesSymbol(psi, tail), base_point=complex(a), source=symbol)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Sampled evidence that a symbol lies in the closed multiplier unit ball."""

    admissible: bool
    sup_estimate: float
    witness: complex | None
    pick_min_eigenvalue: float | None
    note: str


def admissibility_check(
    symbol: PowerSeriesSymbol,
    alpha: WeightParameter | float,
    grid: int = 32,
    tolerance: float = 1e-8,
) -> AdmissibilityVerdict:
    """Estimate sup |phi| on a radial-angular grid; verdict iff sup <= 1 + tolerance.

    For alpha >= -1 the multiplier ball is the H-infinity ball, so the sup
    estimate decides. For alpha < -1 contractivity is strictly stronger;
    the check additionally requires (1 - phi(z_i) conj(phi(z_j))) K(z_i,z_j)
    to be PSD on the sample. A passing verdict is grid evidence, not a proof.
    """
    a = as_weight(alpha)
    if grid < 16:
        raise ValueError("admissibility grid must have at least 16 points per axis")
    radii = 1.0 - np.geomspace(1.0, 1e-3, grid)
    angles = np.exp(2j * np.pi * np.arange(grid) / grid)
    pts = np.unique((radii[:, None] * angles[None, :]).ravel())
    vals = symbol.eval(pts)
    mods = np.abs(vals)
    imax = int(np.argmax(mods))
    sup = float(mods[imax])
    witness = complex(pts[imax]) if sup > 1.0 + tolerance else None
    admissible = sup <= 1.0 + tolerance
    pick_min = None
    note = "sup-norm grid estimate"
    if admissible and a.alpha < -1:
        zw = pts[:, None] * np.conj(pts)[None, :]
        m = (1.0 - vals[:, None] * np.conj(vals)[None, :]) * (1.0 - zw) ** (-(2.0 + a.alpha))
        m = (m + m.conj().T) / 2.0
        lam = np.linalg.eigvalsh(m)
        pick_min = float(lam[0])
        thresh = -1e-9 * max(1.0, float(np.trace(m).real))
        admissible = pick_min >= thresh
        if not admissible and witness is None:
            witness = complex(pts[int(np.argmax(np.abs(np.linalg.eigh(m)[1][:, 0])))])
        note = "sampled Pick condition for alpha < -1: evidence, not proof"
    return AdmissibilityVerdict(
        admissible=admissible,
        sup_estimate=sup,
        witness=witness,
        pick_min_eigenvalue=pick_min,
        note=note,
    )


def parse_complex(text: str) -> complex:
    t = text.strip().replace("−", "-").replace(" ", "")
    t = t.replace("i", "j").replace("I", "j")
    return complex(t)


def parse_symbol(text: str) -> SymbolSpec | PowerSeriesSymbol:
    """Parse the CLI text form of a symbol.

    Forms: `mobius a=0.5+0i zeta=1`, `blaschke zeros=0.5,-0.3+0.2i zeta=1`,
    `monomial n=2` (optional c=...), `singular c=1`, and `series 0,1` with
    comma-separated coefficients in re+imi format.
    """
    parts = text.replace("−", "-").split()
    if not parts:
        raise ValueError("empty symbol text")
    kind, args = parts[0].lower(), parts[1:]
    kv: dict[str, str] = {}
    positional: list[str] = []
    for tok in args:
        if "=" in tok:
            key, val = tok.split("=", 1)
            kv[key.strip().lower()] = val
        else:
            positional.append(tok)
    if kind == "mobius":
        if "a" not in kv:
            raise ValueError("mobius symbol needs a=<point>")
        return MobiusSpec(a=parse_complex(kv["a"]), zeta=parse_complex(kv.get("zeta", "1")))
    if kind == "blaschke":
        raw = kv.get("zeros", ",".join(positional))
        if not raw:
            raise ValueError("blaschke symbol needs zeros=<z1,z2,...>")
        zeros = tuple(parse_complex(t) for t in raw.split(","))
        return BlaschkeSpec(zeros=zeros, zeta=parse_complex(kv.get("zeta", "1")))
    if kind == "monomial":
        if "n" not in kv:
            raise ValueError("monomial symbol needs n=<degree>")
        c = parse_complex(kv["c"]) if "c" in kv else None
        return MonomialSpec(n=int(kv["n"]), c=c)
    if kind == "singular":
        if "c" not in kv:
            raise ValueError("singular symbol needs c=<mass>")
        return SingularInnerSpec(c=float(kv["c"]))
    if kind == "series":
        raw = kv.get("coeffs", ",".join(positional))
        if not raw:
            raise ValueError("series symbol needs comma-separated coefficients")
        coeffs = np.array([parse_complex(t) for t in raw.split(",")], dtype=complex)
        return PowerSeriesSymbol(coeffs, 0.0)
    raise ValueError(f"unknown symbol kind {kind!r}")


def _fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return f"{z.real:g}"
    return f"{z.real:g}{z.imag:+g}i"


def symbol_text(spec: SymbolSpec | PowerSeriesSymbol) -> str:
    """Canonical text form, the inverse of parse_symbol (used in reports)."""
    if isinstance(spec, MobiusSpec):
        return f"mobius a={_fmt_complex(spec.a)} zeta={_fmt_complex(spec.zeta)}"
    if isinstance(spec, BlaschkeSpec):
        zeros = ",".join(_fmt_complex(z) for z in spec.zeros)
        return f"blaschke zeros={zeros} zeta={_fmt_complex(spec.zeta)}"
    if isinstance(spec, MonomialSpec):
        return f"monomial n={spec.n}" + ("" if spec.c is None else f" c={_fmt_complex(spec.c)}")
    if isinstance(spec, SingularInnerSpec):
        return f"singular c={spec.c:g}"
    if isinstance(spec, PowerSeriesSymbol):
        return "series " + ",".join(_fmt_complex(c) for c in spec.coeffs)
    raise TypeError(f"unsupported symbol spec {type(spec).__name__}")

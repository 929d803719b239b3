"""Multiple-root loci of binary forms: eliminants, the incidence
parametrization, and irreducibility evidence, all in exact arithmetic.

A binary form of degree d is the coefficient vector (a_0..a_d) against the
monomials x0^(d-k) x1^k; dehomogenizing at x1 = 1 makes a_0 the leading
coefficient.  Eliminants are primitive integer polynomials in a_0..a_d with
the sign fixed so the lexicographically first term is positive.

Two independent routes to the classical discriminant are kept separate on
purpose: the Sylvester resultant (the oracle) and a Bezout-matrix
determinant (the production path for codimension one).  For higher
multiplicity the generators of the eliminant ideal are found degree by
degree as the exact kernel of the pullback along the incidence
parametrization (b, g) -> (x0 - b*x1)^(l+1) * g.  That is a polynomial
identity, so membership of the image in every generator is exact by
construction.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Sequence, Union

from .errors import SizeCapError
from .linalg import SparseMatrix, kernel_basis, rank, span_dim
from .polynomials import (Poly, det, divide_by_variable, integer_primitive,
                          restrict_to_line, strip_variable_factors)

Scalar = Union[int, Fraction]

DEFAULT_DEGREE_CAP = 6

_CERT_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31)
_KRONECKER_COMBO_CAP = 400000


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(values: Sequence[Scalar]) -> "BinaryForm":
        return BinaryForm(tuple(Fraction(v) for v in values))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class Eliminant:
    """Primitive integer polynomial in a_0..a_d, sign-normalized."""

    poly: Poly
    degree: int

    def to_string(self) -> str:
        names = [f"a{i}" for i in range(self.poly.nvars)]
        return self.poly.to_string(names)


def _make_eliminant(p: Poly) -> Eliminant:
    normal = integer_primitive(p)
    if normal.is_zero:
        raise ValueError("eliminant must be nonzero")
    return Eliminant(normal, normal.total_degree())


def _form_coefficients(d: int) -> list[Poly]:
    """[a_0, .., a_d] as polynomials, descending powers of the root variable."""
    return [Poly.variable(d + 1, k) for k in range(d + 1)]


def _derivative_coefficients(coeffs: list[Poly]) -> list[Poly]:
    d = len(coeffs) - 1
    return [(d - k) * coeffs[k] for k in range(d)]


def _sylvester_matrix(p: list[Poly], q: list[Poly]) -> list[list[Poly]]:
    dp = len(p) - 1
    dq = len(q) - 1
    size = dp + dq
    nvars = p[0].nvars
    zero = Poly.zero(nvars)
    rows = []
    for i in range(dq):
        rows.append([zero] * i + p + [zero] * (size - dp - 1 - i))
    for i in range(dp):
        rows.append([zero] * i + q + [zero] * (size - dq - 1 - i))
    return rows


def classical_discriminant_oracle(d: int, cap: int = DEFAULT_DEGREE_CAP) -> Eliminant:
    """Sylvester resultant of the form and its derivative, divided by the
    leading coefficient and normalized."""
    if d < 2:
        raise ValueError("the discriminant needs degree at least 2")
    if d > cap:
        raise SizeCapError("binary form degree", d, cap)
    p = _form_coefficients(d)
    q = _derivative_coefficients(p)
    resultant = det(_sylvester_matrix(p, q))
    return _make_eliminant(divide_by_variable(resultant, 0))


def _bezout_matrix(d: int) -> list[list[Poly]]:
    """Bezout matrix of the form and its derivative; entries in a_0..a_d.

    Built in an extended ring with two extra variables x, y by dividing
    p(x)q(y) - p(y)q(x) exactly by (x - y)."""
    nvars = d + 3
    x_i, y_i = d + 1, d + 2
    x = Poly.variable(nvars, x_i)
    y = Poly.variable(nvars, y_i)
    a = [Poly.variable(nvars, k) for k in range(d + 1)]

    def as_poly(coeffs: list, var: Poly) -> Poly:
        total = Poly.zero(nvars)
        deg = len(coeffs) - 1
        for k, c in enumerate(coeffs):
            total = total + c * var ** (deg - k)
        return total

    p_coeffs = a
    q_coeffs = [(d - k) * a[k] for k in range(d)]
    numerator = (as_poly(p_coeffs, x) * as_poly(q_coeffs, y)
                 - as_poly(p_coeffs, y) * as_poly(q_coeffs, x))

    # exact division by (x - y), eliminating the highest x-power each step
    quotient_terms: dict[tuple[int, ...], Fraction] = {}
    work = dict(numerator.terms)
    while work:
        exps = max(work, key=lambda e: (e[x_i], e))
        c = work[exps]
        if exps[x_i] == 0:
            raise ArithmeticError("numerator is not divisible by x - y")
        q_exps = list(exps)
        q_exps[x_i] -= 1
        q_key = tuple(q_exps)
        quotient_terms[q_key] = quotient_terms.get(q_key, Fraction(0)) + c
        del work[exps]
        flip = list(q_exps)
        flip[y_i] += 1
        flip_key = tuple(flip)
        new = work.get(flip_key, Fraction(0)) + c
        if new:
            work[flip_key] = new
        else:
            work.pop(flip_key, None)

    entries: dict[tuple[int, int], dict[tuple[int, ...], Fraction]] = {}
    for exps, c in quotient_terms.items():
        i, j = exps[x_i], exps[y_i]
        key = exps[:d + 1]
        cell = entries.setdefault((i, j), {})
        cell[key] = cell.get(key, Fraction(0)) + c
    zero = Poly.zero(d + 1)
    matrix = [[zero for _ in range(d)] for _ in range(d)]
    for (i, j), terms in entries.items():
        if i >= d or j >= d:
            raise ArithmeticError("Bezout entry outside expected size")
        matrix[i][j] = Poly(d + 1, terms)
    return matrix


def _incidence_parametrization(d: int, l: int) -> list[Poly]:
    """Coefficients of (x0 - b*x1)^(l+1) * g as polynomials in (b, c_0..c_e),
    where g = sum c_k x0^(e-k) x1^k and e = d - l - 1."""
    e = d - l - 1
    nvars = 1 + (e + 1)
    b = Poly.variable(nvars, 0)
    c = [Poly.variable(nvars, 1 + k) for k in range(e + 1)]
    out = []
    for r in range(d + 1):
        total = Poly.zero(nvars)
        for j in range(l + 2):
            k = r - j
            if 0 <= k <= e:
                total = total + comb(l + 1, j) * ((-1) ** j) * (b ** j) * c[k]
        out.append(total)
    return out


def parametrized_form(d: int, l: int, b: Scalar, g: Sequence[Scalar]) -> BinaryForm:
    """The form (x0 - b*x1)^(l+1) * g at a concrete parameter point."""
    if not 1 <= l < d:
        raise ValueError("need 1 <= l < d")
    if len(g) != d - l:
        raise ValueError(f"cofactor needs {d - l} coefficients")
    point = [Fraction(b)] + [Fraction(v) for v in g]
    polys = _incidence_parametrization(d, l)
    return BinaryForm(tuple(p.evaluate(point) for p in polys))


def graded_relations(d: int, l: int, degree: int) -> list[Poly]:
    """Homogeneous degree-`degree` polynomials in a_0..a_d vanishing
    identically on the incidence parametrization (an exact kernel)."""
    if not 1 <= l < d:
        raise ValueError("need 1 <= l < d")
    if degree < 1:
        raise ValueError("degree must be at least 1")
    params = _incidence_parametrization(d, l)

    def monomials(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in monomials(total - first, parts - 1):
                yield (first,) + rest

    a_monomials = sorted(monomials(degree, d + 1))
    columns: dict[tuple[int, ...], int] = {}
    rows = []
    for exps in a_monomials:
        pullback = Poly.const(params[0].nvars, 1)
        for k, e in enumerate(exps):
            if e:
                pullback = pullback * params[k] ** e
        row = {}
        for bc_exps, c in pullback.terms.items():
            col = columns.setdefault(bc_exps, len(columns))
            row[col] = c
        rows.append(row)
    matrix = SparseMatrix.from_rows(rows, cols=max(len(columns), 1))
    out = []
    for combo in kernel_basis(matrix.transpose()):
        terms = {exps: c for exps, c in zip(a_monomials, combo) if c}
        out.append(integer_primitive(Poly(d + 1, terms)))
    return out


def _degree_monomials(total: int, nvars: int):
    if nvars == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _degree_monomials(total - first, nvars - 1):
            yield (first,) + rest


def _new_generators(piece: list[Poly], collected: list[Poly],
                    degree: int, d: int) -> list[Poly]:
    """Kernel elements not already in (collected) * monomials."""
    if not collected:
        return list(piece)
    columns = {exps: i for i, exps in enumerate(sorted(_degree_monomials(degree, d + 1)))}

    def row_of(p: Poly) -> dict[int, Fraction]:
        return {columns[e]: c for e, c in p.terms.items()}

    rows = []
    for g in collected:
        gap = degree - g.total_degree()
        if gap < 0:
            continue
        for mono in _degree_monomials(gap, d + 1):
            rows.append(row_of(g * Poly(d + 1, {mono: 1})))
    out = []
    base = span_dim(rows, len(columns))
    for q in piece:
        extended = span_dim(rows + [row_of(q)], len(columns))
        if extended > base:
            rows.append(row_of(q))
            base = extended
            out.append(q)
    return out


def _generators_cut_codimension(generators: list[Poly], d: int, l: int) -> bool:
    """The generators' Jacobian reaches rank l at three generic points of the
    parametrization, so they cut the locus to the expected codimension."""
    rng = random.Random(20111)
    successes = 0
    for _ in range(60):
        b = Fraction(rng.randint(-9, 9))
        g = [Fraction(rng.randint(-9, 9)) for _ in range(d - l)]
        if not g[0]:
            g[0] = Fraction(1)
        point = parametrized_form(d, l, b, g).coeffs
        rows = [[gen.derivative(j).evaluate(point) for j in range(d + 1)]
                for gen in generators]
        if rank(SparseMatrix.from_rows(rows, cols=d + 1)) == l:
            successes += 1
            if successes == 3:
                return True
    return False


def multiple_root_eliminant(d: int, l: int,
                            cap: int = DEFAULT_DEGREE_CAP
                            ) -> Union[Eliminant, list[Eliminant]]:
    """Eliminant of the locus of forms with a root of multiplicity >= l+1.

    For l = 1 the locus is a hypersurface and a single generator is
    returned (a Bezout determinant with monomial factors stripped).  For
    l > 1 the generators of the vanishing ideal are collected degree by
    degree, keeping only elements not generated in lower degrees, until
    their Jacobian cuts the locus to its expected codimension l at sampled
    points of the parametrization.
    """
    if not 1 <= l < d:
        raise ValueError("need 1 <= l < d")
    if d > cap:
        raise SizeCapError("binary form degree", d, cap)
    if l == 1:
        determinant = det(_bezout_matrix(d))
        return _make_eliminant(strip_variable_factors(determinant))
    collected: list[Poly] = []
    for degree in range(1, 2 * (d - 1) + 1):
        piece = graded_relations(d, l, degree)
        collected.extend(_new_generators(piece, collected, degree, d))
        if collected and _generators_cut_codimension(collected, d, l):
            break
    if not collected:
        raise ArithmeticError(f"no eliminant generators found for (d={d}, l={l})")
    return [_make_eliminant(g) for g in collected]


def eliminant_generators(d: int, l: int, cap: int = DEFAULT_DEGREE_CAP) -> list[Eliminant]:
    """Uniform list view of multiple_root_eliminant."""
    result = multiple_root_eliminant(d, l, cap)
    return [result] if isinstance(result, Eliminant) else result


# -- incidence parametrization: exact Jacobian ranks -----------------------


def parametrization_jacobian_rank(d: int, l: int,
                                  sample: tuple[Scalar, Sequence[Scalar]]) -> int:
    """Exact rank of the Jacobian of the parametrization at a sample point."""
    b, g = sample
    if not 1 <= l < d:
        raise ValueError("need 1 <= l < d")
    if len(g) != d - l:
        raise ValueError(f"cofactor needs {d - l} coefficients")
    if not Fraction(g[0]):
        raise ValueError("degenerate sample: cofactor has zero leading coefficient")
    polys = _incidence_parametrization(d, l)
    point = [Fraction(b)] + [Fraction(v) for v in g]
    nparams = len(point)
    rows = [[p.derivative(v).evaluate(point) for v in range(nparams)] for p in polys]
    return rank(SparseMatrix.from_rows(rows))


def sample_jacobian_ranks(d: int, l: int, count: int,
                          rng: random.Random) -> list[int]:
    """Jacobian ranks at `count` random rational samples, resampling (with a
    warning) when a sample happens to be rank-deficient."""
    expected = d - l + 1
    out = []
    for _ in range(count):
        r = None
        for _ in range(50):
            b = Fraction(rng.randint(-9, 9))
            g = [Fraction(rng.randint(-9, 9)) for _ in range(d - l)]
            if not g[0]:
                g[0] = Fraction(1)
            r = parametrization_jacobian_rank(d, l, (b, g))
            if r == expected:
                break
            warnings.warn(f"rank-deficient sample for (d={d}, l={l}); resampling")
        out.append(r)
    return out


def samples_satisfy_generators(d: int, l: int, count: int,
                               rng: random.Random,
                               cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Every sampled point of the parametrization is a zero of every
    eliminant generator (exact evaluation)."""
    generators = eliminant_generators(d, l, cap)
    for _ in range(count):
        b = Fraction(rng.randint(-9, 9))
        g = [Fraction(rng.randint(-9, 9)) for _ in range(d - l)]
        if not g[0]:
            g[0] = Fraction(1)
        form = parametrized_form(d, l, b, g)
        for gen in generators:
            if gen.poly.evaluate(form.coeffs) != 0:
                return False
    return True


# -- univariate irreducibility over the rationals ---------------------------


def _uni_from_poly(p: Poly) -> list[Fraction]:
    if p.nvars != 1:
        raise ValueError("not univariate")
    if p.is_zero:
        return []
    deg = max(e[0] for e in p.terms)
    out = [Fraction(0)] * (deg + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return out


def _uni_primitive_int(coeffs: Sequence[Fraction]) -> list[int]:
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ints = [int(c * denom) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return []
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _uni_eval_int(coeffs: Sequence[int], x: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _has_rational_root(coeffs: Sequence[int]) -> bool:
    if coeffs[0] == 0:
        return True  # root at 0
    for p in _divisors(coeffs[0]):
        for q in _divisors(coeffs[-1]):
            if gcd(p, q) != 1:
                continue
            for num in (p, -p):
                root = Fraction(num, q)
                value = Fraction(0)
                for c in reversed(coeffs):
                    value = value * root + c
                if value == 0:
                    return True
    return False


def _uni_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    b = list(b)
    while b and not b[-1]:
        b.pop()
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    quotient = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        while a and not a[-1]:
            a.pop()
        if len(a) < len(b):
            break
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        quotient[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        while a and not a[-1]:
            a.pop()
    return quotient, a


def _uni_gcd_degree(a: Sequence[int], b: Sequence[int]) -> int:
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]
    while fb and any(fb):
        _, r = _uni_divmod(fa, fb)
        fa, fb = fb, r
    while fa and not fa[-1]:
        fa.pop()
    return len(fa) - 1


def _divides_int(num: Sequence[int], div: Sequence[int]) -> bool:
    q, r = _uni_divmod([Fraction(c) for c in num], [Fraction(c) for c in div])
    return not any(r)


def _kronecker_reducible(coeffs: list[int], combo_cap: int = _KRONECKER_COMBO_CAP):
    """True if a nontrivial factor of degree >= 2 exists; False if provably
    none; None when the divisor enumeration would exceed the work cap."""
    degree = len(coeffs) - 1
    points = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5]
    for k in range(2, degree // 2 + 1):
        values = []
        for x in points:
            v = _uni_eval_int(coeffs, x)
            if v != 0:
                values.append((x, v))
            if len(values) == k + 1:
                break
        if len(values) < k + 1:
            return None
        divisor_lists = []
        combos = 1
        for _, v in values:
            divs = _divisors(v)
            signed = [s for dv in divs for s in (dv, -dv)]
            divisor_lists.append(signed)
            combos *= len(signed)
        if combos > combo_cap:
            return None
        xs = [Fraction(x) for x, _ in values]

        def search(level: int, chosen: list[int]):
            if level == k + 1:
                # Lagrange interpolation through (xs, chosen)
                candidate = [Fraction(0)] * (k + 1)
                for idx, y in enumerate(chosen):
                    basis = [Fraction(1)]
                    denomin = Fraction(1)
                    for j, xj in enumerate(xs):
                        if j == idx:
                            continue
                        new = [Fraction(0)] * (len(basis) + 1)
                        for t, c in enumerate(basis):
                            new[t] -= c * xj
                            new[t + 1] += c
                        basis = new
                        denomin *= xs[idx] - xj
                    scale = Fraction(y) / denomin
                    for t, c in enumerate(basis):
                        candidate[t] += scale * c
                if not candidate[-1]:
                    return False
                if any(c.denominator != 1 for c in candidate):
                    return False
                cand_int = [int(c) for c in candidate]
                if _divides_int(coeffs, cand_int):
                    return True
                return False
            for y in divisor_lists[level]:
                if search(level + 1, chosen + [y]):
                    return True
            return False

        if search(0, []):
            return True
    return False


def _gfp_normalize(coeffs: Sequence[int], p: int) -> tuple[int, ...]:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _gfp_mulmod(a, b, f, p):
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    # reduce mod f (f monic)
    deg_f = len(f) - 1
    for i in range(len(prod) - 1, deg_f - 1, -1):
        c = prod[i]
        if c:
            for j in range(deg_f + 1):
                prod[i - deg_f + j] = (prod[i - deg_f + j] - c * f[j]) % p
    out = prod[:deg_f]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _gfp_powmod(base, exponent, f, p):
    result = (1,)
    b = base
    while exponent:
        if exponent & 1:
            result = _gfp_mulmod(result, b, f, p)
        b = _gfp_mulmod(b, b, f, p)
        exponent >>= 1
    return result


def _gfp_gcd(a, b, p):
    def trim(v):
        v = [c % p for c in v]
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        r = list(a)
        while len(r) >= len(b):
            factor = r[-1] * inv % p
            offset = len(r) - len(b)
            for i, c in enumerate(b):
                r[offset + i] = (r[offset + i] - factor * c) % p
            while r and r[-1] == 0:
                r.pop()
        a, b = b, r
    return tuple(a)


def _gfp_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's test over GF(p); coeffs ascending, degree preserved mod p."""
    f = list(_gfp_normalize(coeffs, p))
    n = len(f) - 1
    if n <= 0:
        return False
    inv = pow(f[-1], p - 2, p)
    f = [c * inv % p for c in f]
    x = (0, 1)
    prime_divs = set()
    k = n
    q = 2
    while q * q <= k:
        while k % q == 0:
            prime_divs.add(q)
            k //= q
        q += 1
    if k > 1:
        prime_divs.add(k)
    power = x
    for _ in range(n):
        power = _gfp_powmod(power, p, f, p)
    minus_x = list(power)
    while len(minus_x) < 2:
        minus_x.append(0)
    minus_x[1] = (minus_x[1] - 1) % p
    if any(c % p for c in minus_x):
        return False
    for q in prime_divs:
        power = x
        for _ in range(n // q):
            power = _gfp_powmod(power, p, f, p)
        diff = list(power)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if not any(c % p for c in diff):
            return False  # x^(p^(n/q)) = x, so f splits into small factors
        if len(_gfp_gcd(f, diff, p)) > 1:
            return False
    return True


def _uni_irreducible_q(coeffs: list[int]):
    """True / False / None (inconclusive) for irreducibility over Q."""
    degree = len(coeffs) - 1
    if degree <= 0:
        return False
    if degree == 1:
        return True
    if _has_rational_root(coeffs):
        return False
    if degree <= 3:
        return True
    derivative = [k * c for k, c in enumerate(coeffs)][1:]
    if _uni_gcd_degree(coeffs, derivative) > 0:
        return False  # repeated factor
    for p in _CERT_PRIMES:
        if coeffs[-1] % p == 0:
            continue
        reduced = _gfp_normalize(coeffs, p)
        if len(reduced) - 1 != degree:
            continue
        if _gfp_irreducible(coeffs, p):
            return True
    result = _kronecker_reducible(coeffs)
    if result is True:
        return False
    if result is False:
        return True
    return None


# -- irreducibility witnesses ------------------------------------------------


@dataclass
class IrreducibilityWitness:
    status: str  # "certified" | "heuristic" | "unknown"
    details: dict


def irreducibility_witness(d: int, l: int, seed: int = 0,
                           cap: int = DEFAULT_DEGREE_CAP) -> IrreducibilityWitness:
    """Irreducibility evidence for the multiple-root locus.

    Certification happens only inside the policy envelope l = 1, d <= 4: the
    eliminant must match the resultant oracle, and at least one of three
    seeded line restrictions must be a full-degree irreducible univariate
    polynomial (which is a sound proof of irreducibility of the
    eliminant).  Outside the envelope the verdict is heuristic; the check
    never claims a negative.
    """
    if not 1 <= l < d:
        raise ValueError("need 1 <= l < d")
    if d > cap:
        raise SizeCapError("binary form degree", d, cap)
    rng = random.Random(seed)
    in_envelope = (l == 1 and d <= 4)
    details: dict = {"envelope": in_envelope}
    if l > 1 and d > 4:
        details["policy"] = "outside the certified envelope; no specialization attempted"
        return IrreducibilityWitness("heuristic", details)

    if l == 1:
        elim = multiple_root_eliminant(d, 1, cap)
        oracle = classical_discriminant_oracle(d, cap)
        details["oracle_match"] = elim.poly == oracle.poly
        target = elim.poly
    else:
        generators = multiple_root_eliminant(d, l, cap)
        details["generator_count"] = len(generators)
        target = generators[0].poly

    total_degree = target.total_degree()
    lines = []
    any_certified = False
    for _ in range(3):
        record = None
        for _ in range(25):
            base = [rng.randint(-3, 3) for _ in range(target.nvars)]
            direction = [rng.randint(-3, 3) for _ in range(target.nvars)]
            if not any(direction):
                continue
            restricted = restrict_to_line(target, base, direction)
            coeffs = _uni_primitive_int(_uni_from_poly(restricted))
            if len(coeffs) - 1 != total_degree:
                continue  # degree dropped: unlucky direction
            verdict = _uni_irreducible_q(coeffs)
            record = {"base": base, "direction": direction,
                      "degree": len(coeffs) - 1, "irreducible": verdict}
            break
        if record is None:
            record = {"degenerate": True}
        else:
            if record.get("irreducible") is True:
                any_certified = True
        lines.append(record)
    details["lines"] = lines
    if all(r.get("degenerate") for r in lines):
        return IrreducibilityWitness("unknown", details)
    if in_envelope and details.get("oracle_match") and any_certified:
        return IrreducibilityWitness("certified", details)
    return IrreducibilityWitness("heuristic", details)

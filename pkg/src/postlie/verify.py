"""Axiom certification and exact linear-algebra checks.

Finite-dimensional (Post-)Lie data is given by structure constants over
exact rationals; an axiom passes iff its residual vanishes identically.
Truncations of the free engines carry a degree vector and a cutoff, and
checks are then restricted to index triples whose products stay within
the cutoff, so that every evaluated identity is exact rather than
approximate.

The module also drives the free engines directly: relation suites on all
basis triples within a degree budget, the degree-by-degree construction
of the convolution inverse of right multiplication, kernels of the
reduced coproduct, and the series oracle matching those kernel dimensions
against the enveloping-algebra factorization of the graded dimensions.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import forests as forest_ops
from . import words as word_ops
from .linear import (
    LinComb,
    TensorPair,
    aslincomb,
    bilinear,
    coproduct,
    counit,
    iterated_reduced,
    lincomb_text,
    reduced_coproduct,
)
from .trees import Forest, Leaf, enumerate_forests, enumerate_prtrees, left_graft_sum
from .words import Sentence

# ---------------------------------------------------------------------------
# Reports


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple | None = None
    residual: str | None = None

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name} witness={self.witness} residual={self.residual}"


@dataclass
class AxiomReport:
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, witness_residuals) -> None:
        """Record one axiom from an iterable of (witness, residual) pairs；
        the first nonzero residual becomes the failure witness."""
        for witness, residual in witness_residuals:
            if residual:
                self.checks.append(
                    AxiomCheck(name, False, witness, str(residual))
                )
                return
        self.checks.append(AxiomCheck(name, True))

    def pretty(self) -> str:
        lines = [c.line() for c in self.checks]
        lines.extend(f"NOTE {n}" for n in self.notes)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "witness": list(c.witness) if c.witness else None,
                    "residual": c.residual,
                }
                for c in self.checks
            ],
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# Structure constants


@dataclass(frozen=True)
class FinPostLie:
    """Structure constants for a bracket and a bilinear product.

    ``bracket[(i, j)]`` expands ``[e_i, e_j]`` and ``product[(i, j)]``
    expands ``e_i * e_j`` over basis indices ``1..dim``; missing entries
    are zero.  For truncated data, ``degrees`` grades the basis and
    ``cutoff`` bounds the total degree of exactly representable products.
    """

    dim: int
    bracket: dict
    product: dict
    degrees: tuple | None = None
    cutoff: int | None = None

    def __post_init__(self):
        for table in (self.bracket, self.product):
            for (i, j), value in table.items():
                for k in value:
                    if not (1 <= i <= self.dim and 1 <= j <= self.dim and 1 <= k <= self.dim):
                        raise ValueError(f"index out of range in entry ({i},{j})->{k}")
        if self.degrees is not None and len(self.degrees) != self.dim:
            raise ValueError("degrees must list one integer per basis element")

    def bracket_of(self, x, y) -> LinComb:
        return bilinear(lambda i, j: self.bracket.get((i, j), LinComb()))(x, y)

    def product_of(self, x, y) -> LinComb:
        return bilinear(lambda i, j: self.product.get((i, j), LinComb()))(x, y)

    def is_abelian(self) -> bool:
        return not any(self.bracket.values())

    def _within(self, *indices) -> bool:
        if self.degrees is None or self.cutoff is None:
            return True
        return sum(self.degrees[i - 1] for i in indices) <= self.cutoff

    def pairs(self):
        rng = range(1, self.dim + 1)
        return (p for p in itertools.product(rng, rng) if self._within(*p))

    def triples(self):
        rng = range(1, self.dim + 1)
        return (t for t in itertools.product(rng, rng, rng) if self._within(*t))


def opposite(alg: FinPostLie) -> FinPostLie:
    """Negate the bracket and swap the product arguments."""
    return FinPostLie(
        dim=alg.dim,
        bracket={(i, j): -v for (i, j), v in alg.bracket.items()},
        product={(j, i): v for (i, j), v in alg.product.items()},
        degrees=alg.degrees,
        cutoff=alg.cutoff,
    )


def load_structure_constants(source) -> FinPostLie:
    """Read structure constants from a JSON document.

    Fields: ``dim``; ``bracket`` and ``product`` as lists of entries
    ``{"i":.., "j":.., "k":.., "coeff": "p/q"}`` (1-based indices,
    unspecified entries are zero); optional ``degrees`` and ``cutoff``.
    """
    if isinstance(source, str):
        with open(source, encoding="utf-8") as fh:
            doc = json.load(fh)
    else:
        doc = source
    dim = int(doc["dim"])

    def read(entries) -> dict:
        table: dict = {}
        for e in entries:
            i, j, k = int(e["i"]), int(e["j"]), int(e["k"])
            c = Fraction(str(e["coeff"]))
            table[(i, j)] = table.get((i, j), LinComb()) + LinComb.of(k, c)
        return {key: v for key, v in table.items() if v}

    degrees = doc.get("degrees")
    return FinPostLie(
        dim=dim,
        bracket=read(doc.get("bracket", ())),
        product=read(doc.get("product", ())),
        degrees=tuple(degrees) if degrees is not None else None,
        cutoff=doc.get("cutoff"),
    )


def structure_constants_json(alg: FinPostLie) -> dict:
    def write(table) -> list:
        out = []
        for (i, j) in sorted(table):
            for k, c in table[(i, j)].sorted_items():
                out.append({"i": i, "j": j, "k": k, "coeff": str(c)})
        return out

    doc = {"dim": alg.dim, "bracket": write(alg.bracket), "product": write(alg.product)}
    if alg.degrees is not None:
        doc["degrees"] = list(alg.degrees)
    if alg.cutoff is not None:
        doc["cutoff"] = alg.cutoff
    return doc


def _associator(prod: Callable, x, y, z) -> LinComb:
    return prod(prod(x, y), z) - prod(x, prod(y, z))


def check_right_postlie(alg: FinPostLie) -> AxiomReport:
    """Antisymmetry and Jacobi for the bracket, plus the two right
    compatibility axioms linking bracket and product."""
    return _check_postlie(alg, side="right")


def check_left_postlie(alg: FinPostLie) -> AxiomReport:
    return _check_postlie(alg, side="left")


def _check_postlie(alg: FinPostLie, side: str) -> AxiomReport:
    report = AxiomReport()
    br, pr = alg.bracket_of, alg.product_of
    e = LinComb.of

    def named(pairs):
        for witness, residual in pairs:
            yield witness, residual.map_terms(lambda i: f"e{i}")

    report.add(
        "antisymmetry",
        named(((i, j), br(e(i), e(j)) + br(e(j), e(i))) for i, j in alg.pairs()),
    )
    report.add(
        "jacobi",
        named(
            (
                (i, j, k),
                br(br(e(i), e(j)), e(k))
                + br(br(e(j), e(k)), e(i))
                + br(br(e(k), e(i)), e(j)),
            )
            for i, j, k in alg.triples()
        ),
    )

    if side == "right":

        def action_residual(i, j, k):
            x, y, z = e(i), e(j), e(k)
            return (
                pr(x, br(y, z))
                - _associator(pr, x, y, z)
                + _associator(pr, x, z, y)
            )

        def product_residual(i, j, k):
            x, y, z = e(i), e(j), e(k)
            return pr(br(x, y), z) - br(pr(x, z), y) - br(x, pr(y, z))

    else:

        def action_residual(i, j, k):
            x, y, z = e(i), e(j), e(k)
            return pr(x, br(y, z)) - br(pr(x, y), z) - br(y, pr(x, z))

        def product_residual(i, j, k):
            x, y, z = e(i), e(j), e(k)
            return (
                pr(br(x, y), z)
                - _associator(pr, y, x, z)
                + _associator(pr, x, y, z)
            )

    report.add(
        "action-on-bracket",
        named(((i, j, k), action_residual(i, j, k)) for i, j, k in alg.triples()),
    )
    report.add(
        "product-on-bracket",
        named(((i, j, k), product_residual(i, j, k)) for i, j, k in alg.triples()),
    )

    if alg.is_abelian():
        report.notes.append(
            f"bracket is abelian: the compatibility axioms amount to the "
            f"{side} pre-Lie law"
        )
    if alg.cutoff is not None:
        report.notes.append(
            f"truncated data: checks restricted to triples of total degree <= {alg.cutoff}"
        )
    return report


# ---------------------------------------------------------------------------
# Free engines


@dataclass(frozen=True)
class Engine:
    """A graded connected Post-Hopf algebra presented by basis enumeration."""

    name: str
    basis: Callable
    star: Callable
    mul: Callable
    unit: object
    deg: Callable


def trees_engine(alphabet: tuple = ("•",)) -> Engine:
    alphabet = tuple(alphabet)
    return Engine(
        name=f"free-trees{alphabet}",
        basis=lambda d: enumerate_forests(d, alphabet),
        star=forest_ops.star,
        mul=lambda a, b: a.concat(b),
        unit=Forest(()),
        deg=lambda f: f.degree,
    )


def words_engine(alphabet: tuple = ("a", "b")) -> Engine:
    alphabet = tuple(alphabet)

    def basis(d: int) -> tuple:
        return enumerate_sentences(d, alphabet)

    return Engine(
        name=f"free-words{alphabet}",
        basis=basis,
        star=word_ops.star,
        mul=lambda a, b: Sentence(a.words + b.words),
        unit=Sentence(()),
        deg=lambda s: s.total_letters,
    )


def enumerate_sentences(total: int, alphabet: tuple) -> tuple:
    """All sentences with the given total letter count (unit for 0)."""
    if total == 0:
        return (Sentence(()),)
    out = []
    for first in range(1, total + 1):
        for word in itertools.product(alphabet, repeat=first):
            for rest in enumerate_sentences(total - first, alphabet):
                out.append(Sentence(("".join(word),) + rest.words))
    return tuple(out)


def _degree_splits(budget: int, slots: int):
    """All tuples of positive degrees of the given length with sum <= budget."""
    if slots == 0:
        yield ()
        return
    for first in range(1, budget - slots + 2):
        for rest in _degree_splits(budget - first, slots - 1):
            yield (first,) + rest


def _basis_tuples(engine: Engine, budget: int, slots: int):
    for split in _degree_splits(budget, slots):
        for combo in itertools.product(*(engine.basis(d) for d in split)):
            yield combo


def hopf_relation_suite(engine: Engine, budget: int = 5) -> AxiomReport:
    """Unit laws, counit/coproduct morphism properties and the two product
    relations of a right Post-Hopf algebra, checked on every basis tuple
    within the degree budget; the left-sided relations are checked after
    opposing both the product and the multiplication."""
    if budget < 2:
        raise ValueError("budget must be at least 2")
    report = AxiomReport()
    st = engine.star
    mul = bilinear(engine.mul)
    unit = LinComb.of(engine.unit)

    def elements():
        for (x,) in _basis_tuples(engine, budget, 1):
            yield x

    report.add(
        "unit-right",
        ((str(x), st(LinComb.of(x), unit) - LinComb.of(x)) for x in elements()),
    )
    report.add(
        "unit-left",
        ((str(x), st(unit, LinComb.of(x))) for x in elements()),
    )

    def counit_residuals():
        for x, y in _basis_tuples(engine, budget, 2):
            got = counit(st(LinComb.of(x), LinComb.of(y)))
            want = counit(LinComb.of(x)) * counit(LinComb.of(y))
            yield (str(x), str(y)), LinComb.of("scalar", got - want)

    report.add("counit-morphism", counit_residuals())

    def coproduct_residuals():
        for x, y in _basis_tuples(engine, budget, 2):
            lhs = coproduct(st(LinComb.of(x), LinComb.of(y)))
            rhs = LinComb()
            for px, cx in coproduct(LinComb.of(x)).items():
                for py, cy in coproduct(LinComb.of(y)).items():
                    left = st(LinComb.of(px.left), LinComb.of(py.left))
                    right = st(LinComb.of(px.right), LinComb.of(py.right))
                    for u, cu in left.items():
                        for v, cv in right.items():
                            rhs += LinComb.of(
                                TensorPair(u, v), cx * cy * cu * cv
                            )
            yield (str(x), str(y)), lhs - rhs

    report.add("coproduct-morphism", coproduct_residuals())

    def product_rule():
        # (x . y) * z = sum (x * z1) . (y * z2)
        for x, y, z in _basis_tuples(engine, budget, 3):
            lhs = st(LinComb.of(engine.mul(x, y)), LinComb.of(z))
            rhs = LinComb()
            for pz, cz in coproduct(LinComb.of(z)).items():
                rhs += cz * mul(
                    st(LinComb.of(x), LinComb.of(pz.left)),
                    st(LinComb.of(y), LinComb.of(pz.right)),
                )
            yield (str(x), str(y), str(z)), lhs - rhs

    report.add("product-rule", product_rule())

    def iterated_rule():
        # (x * y) * z = x * ((y * z1) . z2)
        for x, y, z in _basis_tuples(engine, budget, 3):
            lhs = st(st(LinComb.of(x), LinComb.of(y)), LinComb.of(z))
            rhs = LinComb()
            for pz, cz in coproduct(LinComb.of(z)).items():
                inner = mul(
                    st(LinComb.of(y), LinComb.of(pz.left)),
                    LinComb.of(pz.right),
                )
                rhs += cz * st(LinComb.of(x), inner)
            yield (str(x), str(y), str(z)), lhs - rhs

    report.add("iterated-product-rule", iterated_rule())

    def opposed_product_rule():
        # With u <| v := v * u and u . 'v := v . u:
        # x <| (y .' z) = (x1 <| y) .' (x2 <| z)
        for x, y, z in _basis_tuples(engine, budget, 3):
            lhs = st(LinComb.of(engine.mul(z, y)), LinComb.of(x))
            rhs = LinComb()
            for px, cx in coproduct(LinComb.of(x)).items():
                rhs += cx * mul(
                    st(LinComb.of(z), LinComb.of(px.right)),
                    st(LinComb.of(y), LinComb.of(px.left)),
                )
            yield (str(x), str(y), str(z)), lhs - rhs

    report.add("opposed-product-rule", opposed_product_rule())

    def opposed_iterated_rule():
        # x <| (y <| z) = (x1 .' (x2 <| y)) <| z
        for x, y, z in _basis_tuples(engine, budget, 3):
            lhs = st(st(LinComb.of(z), LinComb.of(y)), LinComb.of(x))
            rhs = LinComb()
            for px, cx in coproduct(LinComb.of(x)).items():
                inner = mul(
                    st(LinComb.of(y), LinComb.of(px.right)),
                    LinComb.of(px.left),
                )
                rhs += cx * st(LinComb.of(z), inner)
            yield (str(x), str(y), str(z)), lhs - rhs

    report.add("opposed-iterated-rule", opposed_iterated_rule())
    return report


# ---------------------------------------------------------------------------
# Exact matrices


def mat_identity(n: int) -> list:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_zero(rows: int, cols: int) -> list:
    return [[Fraction(0)] * cols for _ in range(rows)]


def mat_mul(a: list, b: list) -> list:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = mat_zero(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for t in range(inner):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(cols):
                    oi[j] += c * bt[j]
    return out


def mat_add_scaled(acc: list, m: list, c: Fraction) -> None:
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            acc[i][j] += c * v


def mat_is_zero(m: list) -> bool:
    return all(v == 0 for row in m for v in row)


def rref(matrix: list) -> tuple:
    """Row-reduce a copy; returns (reduced rows, pivot column list)."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def kernel_basis(matrix: list, cols: int) -> list:
    """Basis of the null space of the column-action of the matrix."""
    if not matrix:
        return [
            [Fraction(int(i == j)) for i in range(cols)] for j in range(cols)
        ]
    reduced, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(v)
    return basis


def solve_in_span(columns: list, target: list) -> list:
    """Coordinates of ``target`` in the span of the columns; exact, raises
    ``ArithmeticError`` when the system is inconsistent."""
    rows = len(target)
    aug = [[columns[j][i] for j in range(len(columns))] + [target[i]] for i in range(rows)]
    reduced, pivots = rref(aug)
    n = len(columns)
    if n in pivots:
        raise ArithmeticError("target is outside the span")
    coords = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        coords[p] = reduced[r][n]
    # The columns used here are linearly independent, so this is exact.
    for i in range(rows):
        if sum(columns[j][i] * coords[j] for j in range(n)) != target[i]:
            raise ArithmeticError("inconsistent linear system")
    return coords


# ---------------------------------------------------------------------------
# Convolution inverse of right multiplication


@dataclass
class GradedEndo:
    """A linear endomorphism raising degree by a fixed amount, stored as a
    matrix per source degree."""

    degree: int
    blocks: dict


@dataclass
class ConvolutionInverse:
    budget: int
    beta: dict
    alpha: dict
    report: AxiomReport


def convolution_inverse(budget: int = 4, alphabet: tuple = ("•",)) -> ConvolutionInverse:
    """Build, degree by degree, the two-sided convolution inverse of right
    multiplication on the free tree engine and verify both identities on
    every graded block."""
    engine = trees_engine(alphabet)
    basis = {d: list(engine.basis(d)) for d in range(budget + 1)}
    index = {d: {x: i for i, x in enumerate(basis[d])} for d in basis}

    def vec(x: LinComb, d: int) -> list:
        v = [Fraction(0)] * len(basis[d])
        for term, c in x.items():
            v[index[d][term]] += c
        return v

    def gamma_endo(x: Forest) -> GradedEndo:
        d = x.degree
        blocks = {}
        for m in range(budget - d + 1):
            cols = [vec(forest_ops.star(b, x), m + d) for b in basis[m]]
            blocks[m] = [list(row) for row in zip(*cols)] if cols else []
        return GradedEndo(d, blocks)

    gamma = {x: gamma_endo(x) for d in basis for x in basis[d]}

    beta: dict = {}
    alpha: dict = {}
    unit = Forest(())
    beta[unit] = GradedEndo(0, {m: mat_identity(len(basis[m])) for m in range(budget + 1)})
    alpha[unit] = GradedEndo(0, {m: mat_identity(len(basis[m])) for m in range(budget + 1)})

    for d in range(1, budget + 1):
        for x in basis[d]:
            reduced = reduced_coproduct(LinComb.of(x))
            b_blocks: dict = {}
            a_blocks: dict = {}
            for m in range(budget - d + 1):
                rows = len(basis[m + d])
                cols = len(basis[m])
                b_acc = mat_zero(rows, cols)
                a_acc = mat_zero(rows, cols)
                mat_add_scaled(b_acc, gamma[x].blocks[m], Fraction(-1))
                mat_add_scaled(a_acc, gamma[x].blocks[m], Fraction(-1))
                for pair, c in reduced.items():
                    x1, x2 = pair.left, pair.right
                    d2 = x2.degree
                    mat_add_scaled(
                        b_acc, mat_mul(beta[x1].blocks[m + d2], gamma[x2].blocks[m]), -c
                    )
                    mat_add_scaled(
                        a_acc, mat_mul(gamma[x1].blocks[m + d2], alpha[x2].blocks[m]), -c
                    )
                b_blocks[m] = b_acc
                a_blocks[m] = a_acc
            beta[x] = GradedEndo(d, b_blocks)
            alpha[x] = GradedEndo(d, a_blocks)

    report = AxiomReport()

    def residuals(first: dict, second: dict, order: str):
        for d in range(budget + 1):
            for x in basis[d]:
                eps = Fraction(1) if x == unit else Fraction(0)
                for m in range(budget - d + 1):
                    rows = len(basis[m + d])
                    acc = mat_zero(rows, len(basis[m]))
                    for pair, c in coproduct(LinComb.of(x)).items():
                        x1, x2 = pair.left, pair.right
                        d2 = x2.degree
                        if order == "beta-gamma":
                            block = mat_mul(first[x1].blocks[m + d2], second[x2].blocks[m])
                        else:
                            block = mat_mul(second[x1].blocks[m + d2], first[x2].blocks[m])
                        mat_add_scaled(acc, block, c)
                    if eps:
                        mat_add_scaled(acc, mat_identity(rows), -eps)
                    status = LinComb() if mat_is_zero(acc) else LinComb.of("nonzero-block")
                    yield (str(x), m), status

    report.add("convolution-left-inverse", residuals(beta, gamma, "beta-gamma"))
    report.add("convolution-right-inverse", residuals(alpha, gamma, "gamma-alpha"))
    return ConvolutionInverse(budget, beta, alpha, report)


# ---------------------------------------------------------------------------
# Primitives and the series oracle


def primitive_kernel(n: int, engine: Engine | None = None) -> tuple:
    """Exact kernel of the reduced coproduct on the degree-n block;
    returns (basis of primitive combinations, dimension)."""
    if engine is None:
        engine = trees_engine()
    if n < 1:
        raise ValueError("degree must be positive")
    basis_n = list(engine.basis(n))
    row_index: dict = {}
    for i in range(1, n):
        left = engine.basis(i)
        right = engine.basis(n - i)
        for a in left:
            for b in right:
                row_index[(a, b)] = len(row_index)
    matrix = mat_zero(len(row_index), len(basis_n))
    for col, x in enumerate(basis_n):
        for pair, c in reduced_coproduct(LinComb.of(x)).items():
            matrix[row_index[(pair.left, pair.right)]][col] += c
    kernel = kernel_basis(matrix, len(basis_n))
    combos = [
        LinComb((basis_n[i], v[i]) for i in range(len(basis_n)) if v[i])
        for v in kernel
    ]
    return combos, len(kernel)


def pbw_dims(generator_series: Iterable, cutoff: int) -> list:
    """Solve ``prod_k (1 - t^k)^(-l_k) = 1 / (1 - m(t))`` for the ``l_k``.

    ``generator_series`` lists the generator dimensions in degrees
    ``1..cutoff``.  Non-integral or negative solutions raise
    ``ArithmeticError``, signalling inconsistent input.
    """
    gens = list(generator_series)
    if len(gens) < cutoff:
        raise ValueError("generator series shorter than the cutoff")
    m = [Fraction(0)] + [Fraction(g) for g in gens[:cutoff]]
    h = [Fraction(1)] + [Fraction(0)] * cutoff
    for n in range(1, cutoff + 1):
        h[n] = sum((m[k] * h[n - k] for k in range(1, n + 1)), Fraction(0))

    def series_mul(a: list, b: list) -> list:
        out = [Fraction(0)] * (cutoff + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(cutoff + 1 - i):
                    out[i + j] += ai * b[j]
        return out

    prod = [Fraction(1)] + [Fraction(0)] * cutoff
    dims = []
    for k in range(1, cutoff + 1):
        lk = h[k] - prod[k]
        if lk.denominator != 1 or lk < 0:
            raise ArithmeticError(f"series inversion gives l_{k} = {lk}")
        lk = int(lk)
        dims.append(lk)
        factor = [Fraction(0)] * (cutoff + 1)
        for j in range(cutoff // k + 1):
            factor[k * j] = Fraction(math.comb(lk + j - 1, j)) if j else Fraction(1)
        prod = series_mul(prod, factor)
    return dims


def forest_counts(cutoff: int, alphabet: tuple = ("•",)) -> list:
    """Number of basis forests per degree 0..cutoff."""
    return [len(enumerate_forests(d, tuple(alphabet))) for d in range(cutoff + 1)]


def symmetrization_check(n: int, alphabet: tuple = ("a", "b", "c", "d")) -> AxiomReport:
    """For distinct primitive letters, the (n-1)-fold reduced coproduct of
    their product is the full symmetrization, and deeper iterates vanish."""
    if not (1 <= n <= len(alphabet)):
        raise ValueError(f"need between 1 and {len(alphabet)} distinct letters")
    letters = [Leaf(alphabet[i]) for i in range(n)]
    product = Forest(tuple(letters))
    report = AxiomReport()

    got = iterated_reduced(n - 1, LinComb.of(product))
    want = LinComb(
        (tuple(Forest((letters[i - 1],)) for i in images), 1)
        for images in itertools.permutations(range(1, n + 1))
    )
    report.add("symmetrization", [((str(product),), got - want)])
    for k in (n, n + 1):
        report.add(
            f"vanishing-depth-{k}",
            [((str(product),), iterated_reduced(k, LinComb.of(product)))],
        )
    return report


# ---------------------------------------------------------------------------
# Structure-constant fixtures extracted from the free engines


def _canonical(elements) -> list:
    return sorted(elements, key=lambda x: x.sort_key())


def tree_span_constants(max_degree: int = 3, alphabet: tuple = ("•",)) -> FinPostLie:
    """Truncated constants on the span of single trees: the product grafts,
    the commutator bracket projects to zero on that span."""
    from .trees import Vee, degree, enumerate_trees

    basis = []
    for d in range(1, max_degree + 1):
        basis.extend(_canonical(enumerate_trees(d, tuple(alphabet))))
    index = {t: i + 1 for i, t in enumerate(basis)}
    product = {}
    for i, a in enumerate(basis, start=1):
        for j, b in enumerate(basis, start=1):
            t = Vee(a, b)
            if degree(t) <= max_degree:
                product[(i, j)] = LinComb.of(index[t])
    return FinPostLie(
        dim=len(basis),
        bracket={},
        product=product,
        degrees=tuple(degree(t) for t in basis),
        cutoff=max_degree,
    )


def prtree_left_graft_constants(max_nodes: int = 3) -> FinPostLie:
    """Truncated constants for the node left-grafting product on planar
    rooted trees, with the abelian bracket."""
    basis = []
    for n in range(1, max_nodes + 1):
        basis.extend(_canonical(enumerate_prtrees(n)))
    index = {t: i + 1 for i, t in enumerate(basis)}
    product = {}
    for i, a in enumerate(basis, start=1):
        for j, b in enumerate(basis, start=1):
            if a.nodes + b.nodes <= max_nodes:
                product[(i, j)] = LinComb(
                    (index[t], c) for t, c in left_graft_sum(a, b).items()
                )
    return FinPostLie(
        dim=len(basis),
        bracket={},
        product=product,
        degrees=tuple(t.nodes for t in basis),
        cutoff=max_nodes,
    )


def primitive_postlie_constants(max_degree: int = 4, alphabet: tuple = ("•",)) -> FinPostLie:
    """Constants on a primitive basis of the free tree engine: the bracket
    is the concatenation commutator, the product the Post-Hopf product,
    both expanded exactly in the kernel bases degree by degree."""
    engine = trees_engine(tuple(alphabet))
    kernel_by_degree = {}
    forest_basis = {}
    for d in range(1, max_degree + 1):
        combos, _ = primitive_kernel(d, engine)
        kernel_by_degree[d] = combos
        forest_basis[d] = list(engine.basis(d))

    elements = []
    for d in range(1, max_degree + 1):
        elements.extend((d, combo) for combo in kernel_by_degree[d])

    def coords(x: LinComb, d: int) -> list:
        v = [Fraction(0)] * len(forest_basis[d])
        pos = {f: i for i, f in enumerate(forest_basis[d])}
        for term, c in x.items():
            v[pos[term]] += c
        columns = []
        for combo in kernel_by_degree[d]:
            col = [Fraction(0)] * len(forest_basis[d])
            for term, c in combo.items():
                col[pos[term]] += c
            columns.append(col)
        return solve_in_span(columns, v)

    offset = {}
    count = 0
    for d in range(1, max_degree + 1):
        offset[d] = count
        count += len(kernel_by_degree[d])

    concat_mul = bilinear(lambda a, b: a.concat(b))
    bracket = {}
    product = {}
    for i, (di, pi) in enumerate(elements, start=1):
        for j, (dj, pj) in enumerate(elements, start=1):
            if di + dj > max_degree:
                continue
            d = di + dj
            comm = concat_mul(pi, pj) - concat_mul(pj, pi)
            prod = forest_ops.star(pi, pj)
            for table, value in ((bracket, comm), (product, prod)):
                if not value:
                    continue
                cs = coords(value, d)
                entry = LinComb(
                    (offset[d] + t + 1, c) for t, c in enumerate(cs) if c
                )
                if entry:
                    table[(i, j)] = entry
    return FinPostLie(
        dim=len(elements),
        bracket=bracket,
        product=product,
        degrees=tuple(d for d, _ in elements),
        cutoff=max_degree,
    )

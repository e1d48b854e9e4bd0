"""Cohomology-ring presentations of flag manifolds from Schubert expansions.

The integral cohomology of a flag manifold G/P is a free abelian group on
Schubert classes, graded by word length.  Everything here reduces ring
questions to exact integer linear algebra on that basis:

* `structure_matrix` expands every monomial of a graded degree in a chosen
  set of generating classes; its rows index monomials (descending lex),
  its columns index Schubert classes of that degree.
* `minimal_generators` walks the degrees, keeping the classes needed to
  span each degree on top of products of earlier generators.
* `relation_kernel` / `minimal_relations` find the kernel of the monomial
  evaluation map and filter it down to fresh ideal generators per degree.
* `giambelli` inverts the evaluation map over Z, writing each Schubert
  class as a polynomial in the generators.
* `gysin_analysis` computes the cohomology groups of the circle bundle
  G/P^s -> G/P from cup-by-omega matrices: even groups are cokernels,
  odd groups are kernels.
* `weyl_orbit_invariants` produces invariant polynomials as elementary
  symmetric functions of a reflection-group orbit of a weight, plus the
  classical linear-form families used by SU(n)/Sp(n)/Spin(2n) full flags.
* `assemble_full_flag` merges a fiber presentation P/T with a base G/P
  along invariant/Giambelli glue into a presentation of G/T.

Polynomial degrees throughout are half the cohomological degree (the
class of a length-r Weyl element sits in cohomological degree 2r).
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Mapping
from dataclasses import dataclass

from .cartan import LieType, reflect_weight
from .characteristics import SchubertClass, expand_class_monomial
from .intlinalg import (
    AbelianGroupStructure,
    SparseIntLattice,
    cokernel_structure,
    diagonalize_with_unit_minor,
    kernel_basis,
    smith_with_transforms,
    solve_left,
    unimodular_inverse,
)
from .intpoly import IntPolynomial, PolyRing, monomial_exponents
from .weyl import CosetTable, enumerate_cosets

ORBIT_LIMIT = 1_000_000

_NAME_SPLIT = re.compile(r"([a-zA-Z]+)(\d+)$")


def _name_sort_key(name: str, half_degree: int):
    m = _NAME_SPLIT.match(name)
    if m:
        return (half_degree, m.group(1), int(m.group(2)))
    return (half_degree, name, -1)


@dataclass(frozen=True)
class Generator:
    """A named polynomial generator backed by a Schubert class.

    `degree` is the cohomological (even) degree; `word` is a reduced word
    of the indexing Weyl element, so the class can be resolved in any
    coset table containing it.
    """

    name: str
    degree: int
    word: tuple[int, ...]

    def __post_init__(self):
        if self.degree != 2 * len(self.word):
            raise ValueError(
                f"generator {self.name}: degree {self.degree} does not match "
                f"word length {len(self.word)}"
            )

    @property
    def half_degree(self) -> int:
        return self.degree // 2


class GeneratorSet:
    """An ordered set of generators bound to classes of one coset table."""

    def __init__(self, table: CosetTable, generators):
        self.table = table
        gens = sorted(generators, key=lambda g: _name_sort_key(g.name, g.half_degree))
        self.generators = tuple(gens)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        self.ring = PolyRing(tuple(names), tuple(g.half_degree for g in gens))
        self._classes = {}
        for g in gens:
            try:
                self._classes[g.name] = SchubertClass(*table.class_of_word(g.word))
            except KeyError:
                raise ValueError(
                    f"generator {g.name}: word {g.word} is not a class of the table"
                ) from None

    @classmethod
    def from_words(cls, table: CosetTable, named_words) -> "GeneratorSet":
        """Build from {name: word} or an iterable of (name, word) pairs."""
        pairs = named_words.items() if isinstance(named_words, Mapping) else named_words
        return cls(
            table,
            [Generator(name, 2 * len(word), tuple(word)) for name, word in pairs],
        )

    def class_of(self, name: str) -> SchubertClass:
        return self._classes[name]

    def expand_exponents(self, exponents) -> dict:
        """Schubert expansion vector of the monomial with these exponents."""
        classes = []
        for gen, e in zip(self.generators, exponents):
            classes.extend([self._classes[gen.name]] * e)
        return expand_class_monomial(self.table, classes)

    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


@dataclass
class StructureMatrixBundle:
    """Monomial-by-class expansion matrix in one polynomial degree."""

    m: int
    exponents: list  # row labels: exponent tuples, descending lex
    matrix: list  # b(2m) x beta(m) integer rows


def structure_matrix(table: CosetTable, gens: GeneratorSet, m: int) -> StructureMatrixBundle:
    """Expand every degree-m monomial in the generators over level m."""
    if m < 0:
        raise ValueError("degree must be nonnegative")
    exps = monomial_exponents(gens.ring, m)
    beta = table.beta(m)
    rows = []
    for e in exps:
        vec = gens.expand_exponents(e)
        rows.append([vec.get((m, j), 0) for j in range(1, beta + 1)])
    return StructureMatrixBundle(m, exps, rows)


def _covers_everything(lat: SparseIntLattice, beta: int) -> bool:
    if lat.rank != beta:
        return False
    return all(row[p] == 1 for p, row in lat.pivots.items())


def minimal_generators(table: CosetTable, up_to=None) -> GeneratorSet:
    """Select a minimal set of Schubert classes generating the ring.

    Degree by degree, products of at least two previously chosen
    generators span a sublattice of the degree's classes; whenever that
    sublattice is proper, the smallest set of classes completing it is
    added (ties broken by lowest class index).  Weight classes are named
    w<letter>, higher generators y<degree>.
    """
    if up_to is None:
        if not table.complete:
            raise ValueError("a truncated table needs an explicit degree bound")
        up_to = table.lmax
    chosen: list[Generator] = []
    for m in range(1, up_to + 1):
        beta = table.beta(m)
        if beta == 0:
            continue
        probe = GeneratorSet(table, chosen) if chosen else None
        lat = SparseIntLattice()
        if probe is not None:
            for e in monomial_exponents(probe.ring, m):
                if sum(e) >= 2:
                    vec = probe.expand_exponents(e)
                    lat.add({j: c for (_, j), c in vec.items()})
        if _covers_everything(lat, beta):
            continue
        need_at_least = max(1, beta - lat.rank)
        found = None
        for size in range(need_at_least, beta + 1):
            for combo in itertools.combinations(range(1, beta + 1), size):
                trial = lat.copy()
                for j in combo:
                    trial.add({j: 1})
                if _covers_everything(trial, beta):
                    found = combo
                    break
            if found:
                break
        assert found is not None  # adding every class always completes
        taken = {g.name for g in chosen}
        for j in found:
            word = table.element(m, j).word
            name = f"w{word[0]}" if m == 1 else f"y{m}"
            while name in taken:
                name += "x"
            taken.add(name)
            chosen.append(Generator(name, 2 * m, word))
    return GeneratorSet(table, chosen)


def relation_kernel(table: CosetTable, gens: GeneratorSet, m: int):
    """Basis of the degree-m kernel of monomial evaluation, as polynomials.

    Raises if the generators do not span degree m over Z (the kernel of a
    non-surjective map would not capture all relations).
    """
    bundle = structure_matrix(table, gens, m)
    coker = cokernel_structure(bundle.matrix)
    if not coker.is_trivial():
        raise ValueError(
            f"generators do not span degree {m}: cokernel {coker}"
        )
    out = []
    for row in kernel_basis(bundle.matrix):
        terms = {e: c for e, c in zip(bundle.exponents, row) if c}
        out.append(IntPolynomial(gens.ring, terms))
    return out


def graded_ideal_span(ring: PolyRing, relations, m: int) -> SparseIntLattice:
    """Lattice spanned in degree m by all monomial multiples of relations."""
    lat = SparseIntLattice()
    for rel in relations:
        rel = rel.rename_into(ring) if rel.ring is not ring else rel
        d = rel.degree()
        if d is None or d > m:
            continue
        for e in monomial_exponents(ring, m - d):
            lat.add((ring.monomial(e) * rel).terms)
    return lat


@dataclass(frozen=True)
class Presentation:
    """Generators and relations for a graded ring Z[gens]/<relations>."""

    generators: tuple
    relations: tuple

    @property
    def ring(self) -> PolyRing:
        return PolyRing(
            tuple(g.name for g in self.generators),
            tuple(g.half_degree for g in self.generators),
        )

    def relation_degrees(self) -> tuple[int, ...]:
        return tuple(r.degree() for r in self.relations)

    def words(self) -> dict:
        return {g.name: g.word for g in self.generators}

    def json_obj(self):
        return {
            "generators": [{"name": g.name, "degree": g.degree} for g in self.generators],
            "relations": [str(r) for r in self.relations],
        }

    def text(self) -> str:
        names = ", ".join(g.name for g in self.generators)
        lines = [f"Z[{names}] modulo {len(self.relations)} relations:"]
        for r in self.relations:
            lines.append(f"  [{r.degree()}]  {r} = 0")
        return "\n".join(lines)

    def __str__(self):
        return self.text()


def _fresh_generators(basis, inside):
    """Rows extending span(inside) to span(basis), of minimal count.

    Both arguments are integer row matrices with `inside` contained in the
    integer row span of `basis` (whose rows must be a lattice basis).
    Writing each inside-row in basis coordinates gives a matrix A; Smith
    P*A*Q = D identifies the quotient with a direct sum of Z/d_i, and the
    rows of Q^-1 * basis at positions with d_i != 1 generate it with the
    fewest possible elements.  Filtering basis rows one at a time instead
    is order-dependent and can keep redundant rows, so the quotient
    structure is computed exactly.
    """
    k = len(basis)
    if k == 0:
        return []
    if not inside:
        return [list(row) for row in basis]
    coords = [solve_left(basis, row) for row in inside]
    _, diag, q = smith_with_transforms(coords)
    qinv = unimodular_inverse(q)
    cols = len(basis[0])
    out = []
    for i in range(k):
        d = diag[i][i] if i < len(diag) else 0
        if d != 1:
            out.append(
                [sum(qinv[i][t] * basis[t][j] for t in range(k)) for j in range(cols)]
            )
    return out


def minimal_relations(table: CosetTable, gens: GeneratorSet, up_to: int) -> Presentation:
    """Smallest relation set generating the kernel ideal degree by degree.

    In each degree the kernel lattice is compared with the sublattice
    spanned by monomial multiples of relations already kept, and a minimal
    generating set of the quotient is appended (see _fresh_generators).
    """
    kept = []
    ring = gens.ring
    for m in range(1, up_to + 1):
        kern = relation_kernel(table, gens, m)
        if not kern:
            continue
        exps = monomial_exponents(ring, m)
        basis = [[p.terms.get(e, 0) for e in exps] for p in kern]
        span = graded_ideal_span(ring, kept, m)
        inside = [
            [dict(row).get(e, 0) for e in exps] for row in span.canonical_basis()
        ]
        for row in _fresh_generators(basis, inside):
            terms = {e: c for e, c in zip(exps, row) if c}
            kept.append(IntPolynomial(ring, terms))
    return Presentation(gens.generators, tuple(kept))


def giambelli(table: CosetTable, gens: GeneratorSet, m: int):
    """Polynomials in the generators mapping to each class of level m.

    With P * M * Q = [I; 0] for the structure matrix M, the rows of
    Q * (first beta rows of P) give integer monomial combinations hitting
    each unit class vector exactly.
    """
    bundle = structure_matrix(table, gens, m)
    beta = table.beta(m)
    if beta == 0:
        return []
    try:
        res = diagonalize_with_unit_minor(bundle.matrix)
    except ValueError as exc:
        raise ValueError(f"no unimodular minor in degree {m}: {exc}") from None
    top = res.P[:beta]
    combo = [
        [sum(res.Q[j][t] * top[t][k] for t in range(beta)) for k in range(len(bundle.matrix))]
        for j in range(beta)
    ]
    polys = []
    for j in range(beta):
        terms = {}
        for k, e in enumerate(bundle.exponents):
            if combo[j][k]:
                terms[e] = combo[j][k]
        polys.append(IntPolynomial(gens.ring, terms))
    return polys


# -- circle-bundle (Gysin) analysis -------------------------------------------


@dataclass
class GysinTable:
    """Cohomology groups of the circle bundle over G/P for K = {i}.

    `even[2r]` is the cokernel of cup-with-omega into level r; `odd[2r-1]`
    is free on the kernel of the same matrix, with basis vectors (over the
    level r-1 Schubert basis) in `odd_kernels[2r-1]`.
    """

    lie_type: LieType
    i: int
    up_to: int
    even: dict
    odd: dict
    odd_kernels: dict
    matrices: dict

    def group(self, k: int) -> AbelianGroupStructure:
        """Group in cohomological degree k (trivial when absent)."""
        if k == 0:
            return AbelianGroupStructure(1)
        table = self.even if k % 2 == 0 else self.odd
        return table.get(k, AbelianGroupStructure(0))


def gysin_analysis(table: CosetTable, i: int, up_to: int) -> GysinTable:
    """Groups of G/P^s from the cup-with-omega matrices A_r on G/P."""
    if set(table.K) != {i}:
        raise ValueError(f"table was built for K={sorted(table.K)}, expected K={{{i}}}")
    even, odd, kernels, mats = {}, {}, {}, {}
    top = min(up_to, table.lmax + 1)
    omega = SchubertClass(1, 1)
    for r in range(1, top + 1):
        beta_prev = table.beta(r - 1)
        beta_cur = table.beta(r)
        rows = []
        for j in range(1, beta_prev + 1):
            vec = expand_class_monomial(table, [SchubertClass(r - 1, j), omega])
            rows.append([vec.get((r, k), 0) for k in range(1, beta_cur + 1)])
        mats[r] = rows
        even[2 * r] = cokernel_structure(rows)
        kern = kernel_basis(rows)
        odd[2 * r - 1] = AbelianGroupStructure(len(kern))
        kernels[2 * r - 1] = kern
    return GysinTable(table.lie_type, i, up_to, even, odd, kernels, mats)


# -- Weyl-orbit invariants and classical linear-form families ------------------


def weight_ring(rank: int) -> PolyRing:
    return PolyRing(tuple(f"w{i}" for i in range(1, rank + 1)), (1,) * rank)


def weight_polynomial(ring: PolyRing, vec) -> IntPolynomial:
    """The linear polynomial sum(vec[i] * w_{i+1})."""
    terms = {}
    for i, c in enumerate(vec):
        if c:
            e = [0] * ring.nvars
            e[i] = 1
            terms[tuple(e)] = c
    return IntPolynomial(ring, terms)


def weight_orbit(lie_type: LieType, K, seed: int, limit: int = ORBIT_LIMIT):
    """Orbit of a fundamental weight under the reflections outside K.

    Breadth-first closure; within a level the reflections are applied in
    ascending index, so the output order is deterministic.
    """
    n = lie_type.rank
    if not 1 <= seed <= n:
        raise ValueError(f"seed index {seed} out of range 1..{n}")
    moving = [j for j in range(1, n + 1) if j not in set(K)]
    start = tuple(int(t == seed) for t in range(1, n + 1))
    orbit = [start]
    seen = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for v in frontier:
            for j in moving:
                w = reflect_weight(lie_type, j, v)
                if w not in seen:
                    seen.add(w)
                    orbit.append(w)
                    fresh.append(w)
            if len(orbit) > limit:
                raise ValueError(f"orbit size exceeds limit {limit}")
        frontier = fresh
    return orbit


def elementary_symmetric(ring: PolyRing, forms):
    """[e_1, ..., e_N] of the given linear forms (weight vectors)."""
    es = [ring.one()]
    for f in forms:
        fp = weight_polynomial(ring, f) if not isinstance(f, IntPolynomial) else f
        es.append(ring.zero())
        for r in range(len(es) - 1, 0, -1):
            es[r] = es[r] + fp * es[r - 1]
    return es[1:]


def weyl_orbit_invariants(lie_type: LieType, K, seed: int, limit: int = ORBIT_LIMIT):
    """e_r of the weight orbit, r = 1..orbit size, in the weight ring."""
    orbit = weight_orbit(lie_type, K, seed, limit)
    return elementary_symmetric(weight_ring(lie_type.rank), orbit)


def _unit(rank, i):
    return tuple(int(t == i) for t in range(1, rank + 1))


def _diff(rank, i, j):
    return tuple(int(t == i) - int(t == j) for t in range(1, rank + 1))


def special_unitary_forms(n: int):
    """The n linear forms whose e_r generate the SU(n)/T relation ideal."""
    if n < 2:
        raise ValueError("need n >= 2")
    rank = n - 1
    forms = [_unit(rank, 1)]
    forms += [_diff(rank, k, k - 1) for k in range(2, n)]
    forms.append(tuple(-x for x in _unit(rank, rank)))
    return forms


def symplectic_forms(n: int):
    """The 2n symmetric forms (+-) for Sp(n)/T; odd e_r vanish."""
    if n < 1:
        raise ValueError("need n >= 1")
    out = [_unit(n, 1), tuple(-x for x in _unit(n, 1))]
    for k in range(2, n + 1):
        d = _diff(n, k, k - 1)
        out += [d, tuple(-x for x in d)]
    return out


def spin_even_forms(n: int, first: str = "w1"):
    """The n linear forms entering the Spin(2n)/T invariants.

    The head form is w1 or wn depending on `first` (both dictionaries are
    exposed; tests adjudicate which one annihilates the relations).
    """
    if n < 4:
        raise ValueError("need n >= 4")
    if first not in ("w1", "wn"):
        raise ValueError("first must be 'w1' or 'wn'")
    head = _unit(n, 1) if first == "w1" else _unit(n, n)
    forms = [head]
    forms += [_diff(n, i, i - 1) for i in range(2, n - 1)]
    forms.append(
        tuple(
            int(t == n - 1) + int(t == n) - int(t == n - 2) for t in range(1, n + 1)
        )
    )
    forms.append(_diff(n, n - 1, n))
    return forms


def spin_relations(n: int, first: str = "w1"):
    """Relations and class words for the even-spin full flag Spin(2n)/T.

    Returns (ring, relations, words): generators w1..wn and y2..y_{n-1}
    with y_k the class of the word (n-k, ..., n-1); y_1 means w_{n-1}.
    Relation families: 2y_i - c_i (doubling), the even-index reductions
    y_2j = y_j^2 - 2 y_{j-1} y_{j+1} + ..., and the top quadratic family.
    """
    names = [f"w{i}" for i in range(1, n + 1)] + [f"y{k}" for k in range(2, n)]
    degs = [1] * n + list(range(2, n))
    ring = PolyRing(tuple(names), tuple(degs))

    def y(r):
        if r == 1:
            return ring.variable(f"w{n - 1}")
        return ring.variable(f"y{r}")

    cs = elementary_symmetric(ring, [vec + (0,) * (n - 2) for vec in spin_even_forms(n, first)])
    relations = []
    for i in range(1, n):
        relations.append(2 * y(i) - cs[i - 1])
    for j in range(1, (n - 1) // 2 + 1):
        rel = y(2 * j) + (-1) ** j * y(j) ** 2
        for r in range(1, j):
            rel = rel + 2 * (-1) ** r * y(r) * y(2 * j - r)
        relations.append(rel)
    for k in range((n + 1) // 2, n):
        rel = (-1) ** k * y(k) ** 2
        for r in range(2 * k - n + 1, k):
            rel = rel + 2 * (-1) ** r * y(r) * y(2 * k - r)
        relations.append(rel)
    words = {f"w{i}": (i,) for i in range(1, n + 1)}
    for k in range(2, n):
        words[f"y{k}"] = tuple(range(n - k, n))
    return ring, relations, words


def spin_relations_reduced(n: int, first: str = "w1"):
    """The even-spin relations with even-index y's substituted away.

    Every y_2r is replaced by the polynomial the quadratic family solves
    it to, leaving generators w1..wn and the odd-index y's; the doubling
    and top-quadratic relations survive the substitution.
    """
    ring0, rels0, words0 = spin_relations(n, first)
    names = [f"w{i}" for i in range(1, n + 1)]
    degs = [1] * n
    for k in range(3, n, 2):
        names.append(f"y{k}")
        degs.append(k)
    ring = PolyRing(tuple(names), tuple(degs))

    images: dict[str, IntPolynomial] = {}

    def y_img(r: int) -> IntPolynomial:
        if r == 1:
            return ring.variable(f"w{n - 1}")
        if r % 2 == 1:
            return ring.variable(f"y{r}")
        name = f"y{r}"
        if name not in images:
            j = r // 2
            out = (-1) ** (j - 1) * y_img(j) ** 2
            for k in range(1, j):
                out = out + 2 * (-1) ** (k - 1) * y_img(k) * y_img(2 * j - k)
            images[name] = out
        return images[name]

    mapping = {f"y{k}": y_img(k) for k in range(2, n, 2)}
    n_delta = n - 1
    n_xi = (n - 1) // 2
    keep = rels0[:n_delta] + rels0[n_delta + n_xi :]
    relations = [rel.substitute(mapping, ring) for rel in keep]
    words = {name: words0[name] for name in names}
    return ring, relations, words


# -- expansion of polynomials over a table ------------------------------------


def expand_polynomial(table: CosetTable, poly: IntPolynomial, words) -> dict:
    """Schubert expansion {(r, i): coeff} of a polynomial in named classes.

    `words` maps each variable name to a reduced word resolving a class of
    the table.
    """
    used = [
        name
        for i, name in enumerate(poly.ring.names)
        if any(e[i] for e in poly.terms)
    ]
    classes = {}
    for name in used:
        try:
            classes[name] = table.class_of_word(tuple(words[name]))
        except KeyError:
            raise ValueError(
                f"variable {name}: no class for word {words.get(name)} in the table"
            ) from None
    out = {}
    for exps, coeff in poly.terms.items():
        mono = []
        for name, e in zip(poly.ring.names, exps):
            if e:
                mono.extend([classes[name]] * e)
        vec = expand_class_monomial(table, mono)
        for key, c in vec.items():
            s = out.get(key, 0) + coeff * c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return out


def polynomial_expands_to_zero(table: CosetTable, poly: IntPolynomial, words) -> bool:
    return not expand_polynomial(table, poly, words)


def restrict_to_parabolic(full_table: CosetTable, sub_table: CosetTable, vec) -> dict:
    """Rewrite an expansion over a finer table on a coarser one.

    Every class in the support must be a minimal coset representative of
    the coarser table (true for any class pulled back from it).
    """
    if full_table.lie_type != sub_table.lie_type:
        raise ValueError("tables belong to different Lie types")
    out = {}
    for (r, i), c in vec.items():
        w = full_table.element(r, i)
        key = sub_table.index_of_root_rows(w.root_rows)
        if key is None:
            raise ValueError(f"class ({r},{i}) is not a class of the coarser table")
        out[key] = c
    return out


def invariant_on_parabolic(sub_table: CosetTable, poly: IntPolynomial) -> dict:
    """Expansion over a G/P table of an invariant weight polynomial.

    The polynomial (in w1..wn) is expanded on a truncated full-flag table
    and restricted; invariance guarantees the support lies over G/P.
    """
    d = poly.degree()
    if d is None:
        return {}
    lt = sub_table.lie_type
    full = enumerate_cosets(lt, range(1, lt.rank + 1), max_length=d)
    words = {f"w{i}": (i,) for i in range(1, lt.rank + 1)}
    vec = expand_polynomial(full, poly, words)
    return restrict_to_parabolic(full, sub_table, vec)


def rewrite_in_generators(table: CosetTable, gens: GeneratorSet, vec) -> IntPolynomial:
    """A generator polynomial expanding to the given homogeneous vector."""
    if not vec:
        return gens.ring.zero()
    degrees = {r for (r, _) in vec}
    if len(degrees) != 1:
        raise ValueError("vector is not homogeneous")
    (m,) = degrees
    polys = giambelli(table, gens, m)
    out = gens.ring.zero()
    for (_, j), c in sorted(vec.items()):
        out = out + c * polys[j - 1]
    return out


# -- fibration assembly --------------------------------------------------------


def _bare_unit_variable(ring: PolyRing, poly: IntPolynomial):
    """A (name, coeff) pair for a term +-1 * v with v a higher generator."""
    best = None
    for exps, coeff in poly.terms.items():
        if coeff in (1, -1) and sum(exps) == 1:
            idx = next(i for i, e in enumerate(exps) if e)
            if ring.degrees[idx] > 1:
                cand = (ring.degrees[idx], ring.names[idx], coeff)
                if best is None or cand[:2] > best[:2]:
                    best = cand
    if best is None:
        return None
    return best[1], best[2]


def assemble_full_flag(fiber: Presentation, base: Presentation, glue) -> Presentation:
    """Presentation of G/T from a fiber P/T, a base G/P, and glue pairs.

    Each glue pair (c, g) yields the relation c - g; killing the base
    generators in it must reproduce a fiber relation (checked).  Two
    simplification passes follow: generators carrying a bare unit
    coefficient in some relation are eliminated by substitution, and each
    remaining relation is reduced modulo monomial multiples of the
    lower-degree ones, dropping it when redundant.
    """
    if not fiber.generators:
        return base
    generators = list(fiber.generators) + list(base.generators)
    names = [g.name for g in generators]
    if len(set(names)) != len(names):
        raise ValueError("fiber and base generator names overlap")
    generators.sort(key=lambda g: _name_sort_key(g.name, g.half_degree))
    ring = PolyRing(
        tuple(g.name for g in generators), tuple(g.half_degree for g in generators)
    )
    base_names = {g.name for g in base.generators}
    kill_base = {name: 0 for name in base_names}
    fiber_pending = [h.rename_into(ring) for h in fiber.relations]
    rhos = []
    for c_poly, g_poly in glue:
        rho = c_poly.rename_into(ring) - g_poly.rename_into(ring)
        restricted = rho.substitute(kill_base, ring)
        matched = next((h for h in fiber_pending if h == restricted), None)
        if matched is None:
            raise ValueError(
                f"glue pair of degree {c_poly.degree()} does not restrict "
                "to a fiber relation"
            )
        fiber_pending.remove(matched)
        rhos.append(rho)
    if fiber_pending:
        missing = sorted(h.degree() for h in fiber_pending)
        raise ValueError(f"fiber relations of degree {missing} not covered by glue")

    relations = rhos + [r.rename_into(ring) for r in base.relations]
    relations.sort(key=lambda p: (p.degree(), str(p)))

    # pass 1: eliminate generators that some relation solves with a unit
    while True:
        hit = None
        for rel in relations:
            found = _bare_unit_variable(ring, rel)
            if found:
                hit = (rel, *found)
                break
        if hit is None:
            break
        rel, name, coeff = hit
        solved = (rel - coeff * ring.variable(name)) * (-coeff)
        generators = [g for g in generators if g.name != name]
        ring = PolyRing(
            tuple(g.name for g in generators), tuple(g.half_degree for g in generators)
        )
        mapping = {name: solved.rename_into(ring)}
        relations = [
            r.substitute(mapping, ring) for r in relations if r is not rel
        ]

    # pass 2: reduce each relation modulo the lower ones, drop redundant
    relations.sort(key=lambda p: (p.degree(), str(p)))
    kept = []
    for rel in relations:
        if rel.is_zero():
            continue
        lat = graded_ideal_span(ring, kept, rel.degree())
        residue = lat.reduce(rel.terms)
        if residue:
            kept.append(IntPolynomial(ring, residue))
    return Presentation(tuple(generators), tuple(kept))

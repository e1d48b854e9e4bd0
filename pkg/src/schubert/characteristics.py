"""Structure constants of the Schubert basis.

For classes u_1..u_k and a target w with l(w) = sum l(u_t), fix the
minimized word (i_1..i_m) of w.  Each factor contributes the sum of x_I
over the size-l(u_t) position sets I whose increasing subword product
equals u_t; the structure constant is the triangular operator of the word's
Cartan matrix applied to the product of these sums.

Because a product of q reflections can only have length q when every
prefix increases length, subword search is a depth-first walk that extends
a partial product w' by position p exactly when w'(alpha_{letter p}) > 0.

Two cached fast paths feed the cohomology layer:

* multiplication by a degree-one class ("cover data"): for each target the
  drop-one-position subproducts and the operator values T(x_{all minus p}
  * x_j) are precomputed, turning the Chevalley-type step into lookups;
* pairwise products, cached per (factor, factor) with targets swept once.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .weyl import (
    CosetTable,
    WeylElement,
    _identity_rows,
    _mat_compose,
    _reflect_root_rows,
    reflection_pairs,
    right_multiply_rows,
)
from .cartan import cartan_matrix
from .triangular import cartan_matrix_of_word, evaluate_exponents


@dataclass(frozen=True, order=True)
class SchubertClass:
    """The i-th Schubert class of (complex) degree r, 1-based i."""

    r: int
    i: int

    def key(self):
        return (self.r, self.i)


@dataclass
class SchubertExpansion:
    """A Z-linear combination of the degree-`degree` Schubert classes."""

    degree: int
    coeffs: dict

    def __getitem__(self, cls: SchubertClass) -> int:
        return self.coeffs.get(cls, 0)

    def items(self):
        return sorted(self.coeffs.items())

    def is_zero(self) -> bool:
        return not self.coeffs

    def json_obj(self):
        return {
            "degree": self.degree,
            "terms": [
                {"r": c.r, "i": c.i, "coeff": v} for c, v in self.items()
            ],
        }

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*s[{c.r},{c.i}]" for c, v in self.items())


# ------------------------------------------------------------- subwords


def _first_sign_negative(vec) -> bool:
    for x in vec:
        if x:
            return x < 0
    return False


def _subword_solutions(lie_type, letters, target_rows, k):
    """0-based position tuples I with |I| = k whose product equals the target.

    Only stepwise length-increasing walks can reach length k in k steps, so
    branches extend by position p exactly when the partial product keeps
    alpha_{letters[p]} positive.
    """
    m = len(letters)
    if k > m:
        return []
    n = len(target_rows)
    pairs = reflection_pairs(lie_type)
    identity = _identity_rows(n)
    out = []

    def rec(pos, rows, chosen, need):
        if need == 0:
            if rows == target_rows:
                out.append(chosen)
            return
        for p in range(pos, m - need + 1):
            j0 = letters[p] - 1
            if not _first_sign_negative(rows[j0]):
                rec(p + 1, right_multiply_rows(rows, j0, pairs), chosen + (p,), need - 1)

    rec(0, identity, (), k)
    return out


def subwords_equal_to(word, target: WeylElement):
    """All 1-based position sets I of `word` with sigma_I = target, |I| = l(target).

    >>> from schubert.cartan import LieType
    >>> from schubert.weyl import WeylElement
    >>> s1 = WeylElement.simple_reflection(LieType.parse("A2"), 1)
    >>> subwords_equal_to((1, 2, 1), s1)
    [(1,), (3,)]
    """
    sols = _subword_solutions(
        target.lie_type, tuple(word), target.root_rows, target.length()
    )
    return sorted(tuple(p + 1 for p in sol) for sol in sols)


# ------------------------------------------------------------- characteristics


def _value_from_solutions(lie_type, letters, solution_lists):
    m = len(letters)
    poly = {(0,) * m: 1}
    for sols in sorted(solution_lists, key=len):
        nxt = {}
        for exp, c in poly.items():
            for positions in sols:
                e = list(exp)
                for p in positions:
                    e[p] += 1
                key = tuple(e)
                nxt[key] = nxt.get(key, 0) + c
        poly = nxt
    if m == 0:
        return poly.get((), 0)
    return evaluate_exponents(cartan_matrix_of_word(lie_type, letters), poly)


def _characteristic_on_word(table, letters, factor_classes):
    elements = [table.element(f.r, f.i) for f in factor_classes]
    solution_lists = []
    for f, el in zip(factor_classes, elements):
        sols = _subword_solutions(table.lie_type, letters, el.root_rows, f.r)
        if not sols:
            return 0
        solution_lists.append(sols)
    return _value_from_solutions(table.lie_type, letters, solution_lists)


def characteristic(table: CosetTable, w: SchubertClass, factors) -> int:
    """The coefficient of s_w in the product of the factor classes.

    Preconditions: all classes belong to `table` and l(w) equals the sum of
    the factor lengths.
    """
    factors = list(factors)
    total = sum(f.r for f in factors)
    if total != w.r:
        raise ValueError(
            f"degree mismatch: target has length {w.r}, factors sum to {total}"
        )
    target = table.element(w.r, w.i)
    if len(factors) == 1:
        return 1 if factors[0] == w else 0
    return _characteristic_on_word(table, target.word, factors)


def characteristic_with_word(table: CosetTable, word, factors) -> int:
    """Same as `characteristic`, but along an explicit reduced word of the target.

    The value does not depend on which reduced word is chosen; tests
    exercise that invariance directly through this entry point.
    """
    word = tuple(word)
    target = WeylElement.from_word(table.lie_type, word)
    if target.length() != len(word):
        raise ValueError(f"{word} is not a reduced word")
    factors = list(factors)
    if sum(f.r for f in factors) != len(word):
        raise ValueError("degree mismatch between word and factors")
    return _characteristic_on_word(table, word, factors)


def _expand_chunk(args):
    table, degree, indices, factors = args
    out = []
    for i in indices:
        val = characteristic(table, SchubertClass(degree, i), factors)
        if val:
            out.append((i, val))
    return out


def expand_product(table: CosetTable, factors, threads: int = 1) -> SchubertExpansion:
    """Expand a product of Schubert classes in the Schubert basis.

    A product whose degree exceeds the dimension of a complete table is
    zero; on a truncated table that degree is out of reach and errors.
    Workers partition the target classes when threads > 1.
    """
    factors = [f if isinstance(f, SchubertClass) else SchubertClass(*f) for f in factors]
    degree = sum(f.r for f in factors)
    for f in factors:
        table.element(f.r, f.i)  # validates membership
    if degree > table.lmax:
        if table.complete:
            return SchubertExpansion(degree, {})
        raise ValueError(
            f"degree {degree} exceeds the truncated table (max length {table.lmax})"
        )
    if not factors:
        return SchubertExpansion(0, {SchubertClass(0, 1): 1})
    beta = table.beta(degree)
    indices = range(1, beta + 1)
    if threads > 1 and beta > 1:
        nchunks = min(threads, beta)
        chunks = [list(indices)[k::nchunks] for k in range(nchunks)]
        with multiprocessing.Pool(nchunks) as pool:
            results = pool.map(
                _expand_chunk, [(table, degree, chunk, factors) for chunk in chunks]
            )
        pairs = [p for res in results for p in res]
    else:
        pairs = _expand_chunk((table, degree, list(indices), factors))
    return SchubertExpansion(
        degree, {SchubertClass(degree, i): v for i, v in sorted(pairs)}
    )


# ---------------------------------------------------- cached fast paths
#
# Internal vectors are plain dicts {(r, i): coeff} on table classes.


def _cover_data(table: CosetTable, r: int):
    """Per length-r target: (letters, drop-one class keys, T(x_{-p} x_j) grid)."""
    key = ("cover", r)
    cached = table._cache.get(key)
    if cached is not None:
        return cached
    lt = table.lie_type
    c = cartan_matrix(lt)
    pairs = reflection_pairs(lt)
    n = lt.rank
    identity = _identity_rows(n)
    entries = []
    for w in table.levels[r]:
        letters = w.word
        m = r
        prefixes = [identity]
        for p in range(m):
            prefixes.append(right_multiply_rows(prefixes[-1], letters[p] - 1, pairs))
        suffixes = [identity] * (m + 1)
        for p in range(m - 1, -1, -1):
            suffixes[p] = tuple(_reflect_root_rows(suffixes[p + 1], letters[p] - 1, c))
        cand = []
        for p in range(m):
            rows = _mat_compose(prefixes[p], suffixes[p + 1])
            cand.append(table.index_of_root_rows(rows))
        a = cartan_matrix_of_word(lt, letters)
        tvals = []
        for p in range(m):
            row = []
            for j in range(m):
                exp = [1] * m
                exp[p] -= 1
                exp[j] += 1
                row.append(evaluate_exponents(a, {tuple(exp): 1}))
            tvals.append(tuple(row))
        entries.append((letters, tuple(cand), tuple(tvals)))
    table._cache[key] = entries
    return entries


def _chevalley_apply(table, vec, form, r_target):
    """vec (degree r_target - 1) times the weight class sum form = {letter: c}."""
    out = {}
    for idx, (letters, cand, tvals) in enumerate(_cover_data(table, r_target)):
        total = 0
        for p, uk in enumerate(cand):
            if uk is None:
                continue
            cu = vec.get(uk)
            if not cu:
                continue
            row = tvals[p]
            s = 0
            for j, lj in enumerate(letters):
                fc = form.get(lj)
                if fc:
                    s += fc * row[j]
            if s:
                total += cu * s
        if total:
            out[(r_target, idx + 1)] = total
    return out


def expand_pair(table: CosetTable, u: SchubertClass, v: SchubertClass):
    """{target key: coefficient} for s_u * s_v, cached symmetrically."""
    a, b = sorted([u.key(), v.key()])
    key = ("pair", a, b)
    cached = table._cache.get(key)
    if cached is not None:
        return cached
    r = a[0] + b[0]
    result = {}
    if r <= table.lmax:
        ua = table.element(*a)
        ub = table.element(*b)
        lt = table.lie_type
        for idx, w in enumerate(table.levels[r]):
            letters = w.word
            sols_a = _subword_solutions(lt, letters, ua.root_rows, a[0])
            if not sols_a:
                continue
            sols_b = _subword_solutions(lt, letters, ub.root_rows, b[0])
            if not sols_b:
                continue
            val = _value_from_solutions(lt, letters, [sols_a, sols_b])
            if val:
                result[(r, idx + 1)] = val
    elif not table.complete:
        raise ValueError(f"degree {r} exceeds the truncated table")
    table._cache[key] = result
    return result


def multiply_vec_by_class(table: CosetTable, vec, cls: SchubertClass):
    """Product of a degree-homogeneous vector with one class, as a vector."""
    if not vec:
        return {}
    r_in = next(iter(vec))[0]
    r_target = r_in + cls.r
    if r_target > table.lmax:
        if table.complete:
            return {}
        raise ValueError(f"degree {r_target} exceeds the truncated table")
    if cls.r == 1:
        letter = table.element(1, cls.i).word[0]
        return _chevalley_apply(table, vec, {letter: 1}, r_target)
    out = {}
    for ukey, cu in vec.items():
        row = expand_pair(table, SchubertClass(*ukey), cls)
        for t, av in row.items():
            s = out.get(t, 0) + cu * av
            if s:
                out[t] = s
            elif t in out:
                del out[t]
    return out


def expand_class_monomial(table: CosetTable, classes):
    """Expansion vector of a product of classes (sorted internally, cached)."""
    classes = tuple(sorted(c.key() if isinstance(c, SchubertClass) else tuple(c) for c in classes))
    return _expand_class_monomial(table, classes)


def _expand_class_monomial(table, classes):
    if not classes:
        return {(0, 1): 1}
    key = ("mono", classes)
    cached = table._cache.get(key)
    if cached is not None:
        return cached
    head, rest = classes[0], classes[1:]
    vec = _expand_class_monomial(table, rest)
    out = multiply_vec_by_class(table, vec, SchubertClass(*head))
    table._cache[key] = out
    return out

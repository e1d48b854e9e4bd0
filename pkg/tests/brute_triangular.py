"""Brute-force oracle for the triangular operator, independent of the package.

The operator value on a degree-m form h in x_1..x_m is computed here by
rewriting modulo the relations

    x_j^2  ->  sum_{i<j} a_{ij} * x_i * x_j

with a fixed strategy (highest squared variable first) until the form is
multilinear, then reading off the coefficient of x_1*...*x_m.  Each rewrite
strictly decreases the exponent vector read from the highest variable down,
so this terminates.  Agreement with the recursive operator on all monomials
is the real content of the cross-check.
"""


def reduce_to_multilinear(size, entry, terms):
    """entry(i, j): 0-based strict-upper coefficient a_{i+1,j+1}."""
    terms = dict(terms)
    while True:
        target = None
        for exp in terms:
            for j in range(size - 1, -1, -1):
                if exp[j] >= 2:
                    if target is None or j > target[1]:
                        target = (exp, j)
                    break
        if target is None:
            return terms
        exp, j = target
        coeff = terms.pop(exp)
        if coeff == 0:
            continue
        # x_j^2 -> sum_{i<j} a_{ij} x_i x_j : drop one power of x_j, add one of x_i
        for i in range(j):
            a = entry(i, j)
            if a == 0:
                continue
            new = list(exp)
            new[j] -= 1
            new[i] += 1
            key = tuple(new)
            c = terms.get(key, 0) + a * coeff
            if c:
                terms[key] = c
            elif key in terms:
                del terms[key]


def brute_t_operator(size, entry, terms):
    """Oracle value of the triangular operator on a sparse exponent dict."""
    reduced = reduce_to_multilinear(size, entry, terms)
    return reduced.get((1,) * size, 0)

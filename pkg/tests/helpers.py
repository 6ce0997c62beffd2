"""Independent brute-force oracles used by the test suite.

These deliberately avoid the library's own algorithms: contractibility is
decided by searching every beat-point removal order, chains are enumerated
from the raw order relation, and transitive closures are recomputed from
scratch.
"""

from __future__ import annotations

from itertools import combinations

from finspace.posets import FinitePoset


def brute_contractible(X: FinitePoset) -> bool:
    """Search all beat-point removal orders down to a singleton."""
    order = {
        (a, b) for a in X.elements for b in X.elements if a != b and X.leq(a, b)
    }
    memo: dict[frozenset, bool] = {}

    def beats(elems: frozenset) -> list[str]:
        out = []
        for x in elems:
            down = [a for a in elems if (a, x) in order]
            up = [b for b in elems if (x, b) in order]
            if down and any(all((a, m) in order or a == m for a in down) for m in down):
                out.append(x)
            elif up and any(all((m, b) in order or b == m for b in up) for m in up):
                out.append(x)
        return out

    def search(elems: frozenset) -> bool:
        if len(elems) == 1:
            return True
        if elems in memo:
            return memo[elems]
        result = any(search(elems - {x}) for x in beats(elems))
        memo[elems] = result
        return result

    return search(frozenset(X.elements))


def brute_chains(X: FinitePoset) -> set[frozenset]:
    """All non-empty chains, enumerated by subset filtering."""
    out = set()
    elems = list(X.elements)
    for k in range(1, len(elems) + 1):
        for sub in combinations(elems, k):
            if all(
                X.leq(a, b) or X.leq(b, a) for a, b in combinations(sub, 2)
            ):
                out.add(frozenset(sub))
    return out


def brute_transitive_closure(
    elements, pairs
) -> set[tuple[str, str]]:
    """Warshall closure of a relation, recomputed independently."""
    reach = {(a, b) for a, b in pairs}
    for m in elements:
        for a in elements:
            for b in elements:
                if (a, m) in reach and (m, b) in reach:
                    reach.add((a, b))
    return reach

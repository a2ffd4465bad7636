"""Generic extensions by simple modules and the map from words to multipartitions.

``sigma_plus(i, pi)`` is the class of the generic extension ``S_i * M(pi)``:
the longest summand topped at ``i+1`` gains a new top ``S_i``.  Folding it
over a word from the right gives ``wp``.  Everything here works on dual
components.
"""

from __future__ import annotations

import os
from itertools import groupby

from .core import MultiPartition, Word, add_part, part, remove_part, wrap

DEFAULT_FIBER_CAP = 10**6


class FiberTooLarge(RuntimeError):
    pass


def is_separated(pi: MultiPartition) -> bool:
    """True iff for every length ``t`` some vertex has no summand of length ``t``."""
    lengths = set()
    for q in pi.duals:
        lengths.update(q)
    return all(any(t not in q for q in pi.duals) for t in lengths)


def sigma_plus(i: int, pi: MultiPartition) -> MultiPartition:
    n = pi.n
    i = wrap(i, n)
    nxt = pi.dual_at(i + 1)
    c = part(nxt, 1)
    return pi.with_duals({i + 1: remove_part(nxt, c), i: add_part(pi.dual_at(i), c + 1)})


def in_image(i: int, pi: MultiPartition) -> bool:
    """Whether ``pi`` has a dual part at ``i`` exceeding the longest part at ``i+1``."""
    return part(pi.dual_at(i), 1) > part(pi.dual_at(i + 1), 1)


def sigma_minus(i: int, pi: MultiPartition) -> MultiPartition:
    """Right inverse of ``sigma_plus(i, -)`` on its image."""
    n = pi.n
    i = wrap(i, n)
    here, nxt = pi.dual_at(i), pi.dual_at(i + 1)
    bound = part(nxt, 1)
    bigger = [c for c in here if c > bound]
    if not bigger:
        raise ValueError(f"{pi} is not in the image of sigma_{i}^+")
    c = min(bigger)
    return pi.with_duals({i: remove_part(here, c), i + 1: add_part(nxt, c - 1)})


def wp(w: Word) -> MultiPartition:
    pi = MultiPartition.empty(w.n)
    for i in reversed(w.letters):
        pi = sigma_plus(i, pi)
    return pi


def star(factors, n: int) -> MultiPartition:
    """Generic extension ``S_{i_1} * ... * S_{i_m}`` of simple classes.

    ``factors`` may be letters or size-one multipartitions; anything else is
    rejected since only extensions by simples are computed here.
    """
    letters = []
    for f in factors:
        if isinstance(f, MultiPartition):
            s = f.summands()
            if f.n != n or len(s) != 1 or s[0][1] != 1:
                raise ValueError(f"{f} is not the class of a simple module")
            letters.append(s[0][0])
        else:
            letters.append(int(f))
    return wp(Word(n, tuple(letters)))


def canonical_word(pi: MultiPartition) -> Word:
    """A word in the fiber of ``pi``, descending by the smallest admissible vertex."""
    if not is_separated(pi):
        raise ValueError(f"{pi} is not separated")
    letters = []
    while not pi.is_empty():
        i = next(i for i in range(1, pi.n + 1) if in_image(i, pi))
        letters.append(i)
        pi = sigma_minus(i, pi)
    return Word(pi.n, tuple(letters))


def predecessors(pi: MultiPartition):
    """All ``(i, mu)`` with ``sigma_plus(i, mu) == pi``."""
    out = []
    for i in range(1, pi.n + 1):
        here, nxt = pi.dual_at(i), pi.dual_at(i + 1)
        bound = part(nxt, 1)
        for c in sorted(set(here)):
            if c > bound:
                out.append((i, pi.with_duals({i: remove_part(here, c), i + 1: add_part(nxt, c - 1)})))
    return out


def fiber_size(pi: MultiPartition, _memo=None) -> int:
    """Number of words ``w`` with ``wp(w) == pi`` (0 if ``pi`` is not separated)."""
    memo = {} if _memo is None else _memo
    if pi in memo:
        return memo[pi]
    if pi.is_empty():
        return 1
    total = sum(fiber_size(mu, memo) for _, mu in predecessors(pi))
    memo[pi] = total
    return total


def fiber_cap() -> int:
    """Largest fiber ``fiber`` will list, from ``QHALL_FIBER_CAP`` if set."""
    raw = os.environ.get("QHALL_FIBER_CAP")
    if raw is None:
        return DEFAULT_FIBER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"QHALL_FIBER_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("QHALL_FIBER_CAP must be at least 1")
    return cap


def fiber(pi: MultiPartition, cap: int | None = None) -> list:
    """All words in the fiber of ``pi``, sorted by letters."""
    if not is_separated(pi):
        raise ValueError(f"{pi} is not separated")
    cap = fiber_cap() if cap is None else cap
    count = fiber_size(pi)
    if count > cap:
        raise FiberTooLarge(f"fiber has {count} words, above the cap of {cap}")
    memo = {}

    def rec(mu):
        if mu in memo:
            return memo[mu]
        if mu.is_empty():
            res = [()]
        else:
            res = [(i,) + tail for i, nu in predecessors(mu) for tail in rec(nu)]
        memo[mu] = res
        return res

    return [Word(pi.n, ls) for ls in sorted(rec(pi))]


def tight_form(w: Word) -> tuple:
    """Run-length encoding ``((j_1, e_1), ..., (j_t, e_t))``."""
    return tuple((j, len(list(g))) for j, g in groupby(w.letters))


def expand_tight(n: int, pairs) -> Word:
    return Word(n, tuple(j for j, e in pairs for _ in range(e)))


def is_distinguished(w: Word) -> bool:
    """Whether ``M(wp(w))`` has a unique reduced filtration of type ``w``.

    Checked through the dual-part inequalities: for each run ``i^e`` with
    suffix image ``nu``, the ``e``-th dual part of ``nu`` at ``i+1`` must be at
    least the first dual part at ``i``.
    """
    pairs = tight_form(w)
    nu = MultiPartition.empty(w.n)
    for i, e in reversed(pairs):
        if part(nu.dual_at(i + 1), e) < part(nu.dual_at(i), 1):
            return False
        for _ in range(e):
            nu = sigma_plus(i, nu)
    return True

"""
Brute-force lattice path counts.

Two path models:

* chamber paths: unit steps in Z^k from the origin to (r,...,r), staying in
  0 <= x_1 <= ... <= x_k after every step, bucketed by the number of
  ascents (consecutive steps whose second step moves a coordinate with a
  larger subscript than the first);
* Narayana paths: j steps from the origin to (a_1,...,a_k), every step
  raising every coordinate by at least one, with x_1 >= ... >= x_k >= l
  after step l.

Both are deliberately naive so they can certify the closed formulas.
"""

import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

DEFAULT_MAX_STEPS = 16
DEFAULT_MAX_COORD = 12
DEFAULT_MAX_J = 6
BUDGET_ENV = "NARAYANA_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


def _env_budget():
    """
    NARAYANA_BUDGET=<int> replaces every default guard with that bound;
    NARAYANA_BUDGET=unlimited disables the guards.
    """
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return None
    if raw.strip().lower() in ("unlimited", "none", "inf", "0"):
        return float("inf")
    return int(raw)


@dataclass(frozen=True)
class SulankePathSpec:
    k: int
    r: int

    def __post_init__(self):
        if self.k < 1 or self.r < 0:
            raise ValueError("need k >= 1 and r >= 0, got %r" % (self,))

    @property
    def steps(self):
        return self.k * self.r


@dataclass(frozen=True)
class NarayanaPathSpec:
    a: tuple
    j: int

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if not self.a:
            raise ValueError("need at least one coordinate")
        if any(self.a[i] < self.a[i + 1] for i in range(len(self.a) - 1)):
            raise ValueError("target must be nonincreasing: %r" % (self.a,))
        if self.j < 0:
            raise ValueError("j must be >= 0")


def _sulanke_dfs(k, r, pos, last, ascents, counts):
    done = True
    for c in range(k):
        if pos[c] == r:
            continue
        done = False
        # chamber condition after the step: x_c + 1 <= x_{c+1}
        if c + 1 < k and pos[c] + 1 > pos[c + 1]:
            continue
        pos[c] += 1
        _sulanke_dfs(k, r, pos, c, ascents + (last is not None and c > last), counts)
        pos[c] -= 1
    if done:
        counts[ascents] += 1


def _prefixes(k, r, depth):
    "All admissible partial paths of the given length as (pos, last, ascents)."
    states = [((0,) * k, None, 0)]
    for _ in range(depth):
        nxt = []
        for pos, last, asc in states:
            for c in range(k):
                if pos[c] == r or (c + 1 < k and pos[c] + 1 > pos[c + 1]):
                    continue
                npos = pos[:c] + (pos[c] + 1,) + pos[c + 1:]
                nxt.append((npos, c, asc + (last is not None and c > last)))
        states = nxt
    return states


def _sulanke_branch(args):
    k, r, (pos, last, asc) = args
    counts = Counter()
    _sulanke_dfs(k, r, list(pos), last, asc, counts)
    return counts


def count_sulanke_paths(spec, max_steps=None, jobs=1):
    """
    Exhaustive DFS count of chamber paths, as a dict {ascents: count}.

    ``jobs > 1`` splits the search by short prefixes across processes; the
    result does not depend on it.
    """
    if not isinstance(spec, SulankePathSpec):
        spec = SulankePathSpec(*spec)
    k, r = spec.k, spec.r
    limit = max_steps if max_steps is not None else (_env_budget() or DEFAULT_MAX_STEPS)
    if spec.steps > limit:
        raise BudgetExceeded("k*r = %d exceeds the step budget %s" % (spec.steps, limit))
    if r == 0:
        return {0: 1}
    tasks = [(k, r, st) for st in _prefixes(k, r, min(4, spec.steps))]
    total = Counter()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(_sulanke_branch, tasks):
                total.update(part)
    else:
        for t in tasks:
            total.update(_sulanke_branch(t))
    return dict(sorted(total.items()))


def count_sulanke_paths_dp(k, r):
    """
    Independent dynamic programme over (position, last coordinate moved),
    returning the same {ascents: count} map as the DFS.
    """
    if r == 0:
        return {0: 1}
    # state -> Counter(ascents -> count)
    layer = {((0,) * k, None): Counter({0: 1})}
    for _ in range(k * r):
        nxt = defaultdict(Counter)
        for (pos, last), dist in layer.items():
            for c in range(k):
                if pos[c] == r:
                    continue
                if c + 1 < k and pos[c] + 1 > pos[c + 1]:
                    continue
                npos = pos[:c] + (pos[c] + 1,) + pos[c + 1:]
                bump = 1 if last is not None and c > last else 0
                bucket = nxt[(npos, c)]
                for asc, n in dist.items():
                    bucket[asc + bump] += n
        layer = nxt
    total = Counter()
    for dist in layer.values():
        total.update(dist)
    return dict(sorted(total.items()))


def total_chamber_paths(k, r):
    "Number of chamber paths, by a DP over positions only."
    ways = {(0,) * k: 1}
    for _ in range(k * r):
        nxt = defaultdict(int)
        for pos, n in ways.items():
            for c in range(k):
                if pos[c] < r and (c + 1 == k or pos[c] + 1 <= pos[c + 1]):
                    nxt[pos[:c] + (pos[c] + 1,) + pos[c + 1:]] += n
        ways = nxt
    return sum(ways.values())


def count_narayana_paths(spec, max_coord=None, max_j=None):
    "Exhaustive count of j-step Narayana paths ending exactly at a."
    if not isinstance(spec, NarayanaPathSpec):
        spec = NarayanaPathSpec(*spec)
    a, j = spec.a, spec.j
    env = _env_budget()
    cmax = max_coord if max_coord is not None else (env or DEFAULT_MAX_COORD)
    jmax = max_j if max_j is not None else (env or DEFAULT_MAX_J)
    if max(a) > cmax or j > jmax:
        raise BudgetExceeded("narayana path query %r exceeds budget (coords <= %s, j <= %s)"
                             % (spec, cmax, jmax))
    k = len(a)
    if a[-1] < j:
        return 0

    def walk(pos, step):
        if step == j:
            return 1 if pos == a else 0
        left = j - step
        ranges = [range(p + 1, t - left + 2) for p, t in zip(pos, a)]
        n = 0
        for nxt in product(*ranges):
            if nxt[-1] < step + 1:
                continue
            if any(nxt[i] < nxt[i + 1] for i in range(k - 1)):
                continue
            n += walk(nxt, step + 1)
        return n

    return walk((0,) * k, 0)

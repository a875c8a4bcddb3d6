"""Independent oracles used by the tests.

These deliberately avoid the code paths they check: Bell numbers come from
Aitken's triangle, binomials from Pascal's triangle, star counts from
literal subset enumeration over an adjacency structure, and edge-slot
decoding from a linear scan.
"""
import itertools


def bell_numbers(count):
    """[B_0, B_1, ...] via Aitken's triangle: each row starts with the
    previous row's last entry and accumulates left-to-right."""
    bells = [1]
    row = [1]
    for _ in range(count - 1):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        bells.append(row[0])
    return bells


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def count_stars_brute(n, edges, m):
    """Literal m-star enumeration: every (center, set of m-1 neighbours)."""
    adj = {v: set() for v in range(1, n + 1)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    total = 0
    for center in range(1, n + 1):
        for _leaves in itertools.combinations(sorted(adj[center]), m - 1):
            total += 1
    return total


def all_pairs(n):
    """Upper-triangle vertex pairs (0-based) in row-major order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def slot_to_pair_scan(slot, n):
    """Decode an edge-slot index by linear scan over rows."""
    i = 0
    remaining = slot
    while remaining >= n - 1 - i:
        remaining -= n - 1 - i
        i += 1
    return i, i + 1 + remaining

#!/usr/bin/env python3
"""Independent reference for the golden position files.

Works directly from the game rules with plain Python sets, sharing no code
with the C++ library. Run from the repository root:

    python3 tests/oracles/root_game_oracle.py tests/golden
"""
import itertools
import json
import sys
from pathlib import Path


def squares(n):
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def initial_tokens(perms):
    n = len(perms[0])
    tokens = {s: set() for s in squares(n)}
    for k, p in enumerate(perms, start=1):
        for i, j in squares(n):
            if p[i - 1] > p[j - 1]:
                tokens[(i, j)].add(k)
    return tokens


def is_ideal(a, n):
    # Closed upward and to the right in the drawn array.
    for i, j in a:
        for i2 in range(1, i + 1):
            for j2 in range(j, n + 1):
                if i2 < j2 and (i2, j2) not in a:
                    return False
    return True


def ideals(n):
    """All ideals, grown one addable square at a time."""
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for a in frontier:
            for s in squares(n):
                if s in a:
                    continue
                b = a | {s}
                if b not in seen and is_ideal(b, n):
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def splittable(tokens, region, n):
    out = set()
    for ideal in ideals(n):
        a = frozenset(region) & ideal
        if a and a != frozenset(region):
            if sum(len(tokens[s]) for s in a) == len(a):
                out.add(a)
    return out


def move(tokens, region, k, i, j, n):
    new = {s: set(v) for s, v in tokens.items()}
    for h in range(j + 1, n + 1):
        src, dst = (j, h), (i, h)
        if src in region and dst in region and k in tokens[src] and k not in tokens[dst]:
            new[src].discard(k)
            new[dst].add(k)
    for h in range(1, i):
        src, dst = (h, i), (h, j)
        if src in region and dst in region and k in tokens[src] and k not in tokens[dst]:
            new[src].discard(k)
            new[dst].add(k)
    return new


def dump(n, m, tokens, regions):
    return {
        "n": n,
        "m": m,
        "tokens": [{"i": i, "j": j, "labels": sorted(tokens[(i, j)])}
                   for (i, j) in squares(n) if tokens[(i, j)]],
        "regions": [[[i, j] for (i, j) in sorted(r)]
                    for r in sorted(regions, key=lambda r: min(r))],
    }


def encode(word, N, kind):
    n = len(word)
    zeros = [p for p in range(1, n + 1) if word[p - 1] == "0"]
    ones = [p for p in range(1, n + 1) if word[p - 1] == "1"]
    if kind == "pi":
        return zeros + ones + list(range(n + 1, n + N + 1))
    if kind == "prime":
        return [z + N for z in zeros] + list(range(1, N + 1)) + [o + N for o in ones]
    return zeros[::-1] + list(range(n + N, n, -1)) + ones[::-1]


def small_example(out):
    perms = [[int(c) for c in w] for w in ("3426175", "5162347", "1326754")]
    n = 7
    tokens = initial_tokens(perms)
    whole = set(squares(n))
    (out / "small_initial.json").write_text(json.dumps(dump(n, 3, tokens, [whole]), indent=1) + "\n")

    candidates = splittable(tokens, whole, n)
    # Neither the split nor its size is fixed by the example. Take the largest
    # splittable ideal whose complement still lets the (3,4) move displace a
    # 1-token.
    usable = []
    for a in sorted(candidates, key=lambda a: (len(a), sorted(a))):
        rest = whole - a
        after = move(tokens, rest, 1, 3, 4, n)
        if after != tokens:
            usable.append(a)
    split_part = max(usable, key=len)
    rest = whole - split_part
    regions = [set(split_part), rest]
    (out / "small_split.json").write_text(json.dumps(dump(n, 3, tokens, regions), indent=1) + "\n")
    after = move(tokens, rest, 1, 3, 4, n)
    (out / "small_after_move.json").write_text(json.dumps(dump(n, 3, after, regions), indent=1) + "\n")
    summary = {
        "splittable_count": len(candidates),
        "usable_count": len(usable),
        "split_part": [list(s) for s in sorted(split_part)],
        "unshaded_region_id": list(min(rest)),
    }
    (out / "small_summary.json").write_text(json.dumps(summary, indent=1) + "\n")


def worked_position(out):
    sigma, mu, nu, N = "1010101", "1001011", "0100111", 3
    perms = [encode(sigma, N, "pi"), encode(mu, N, "prime"), encode(nu, N, "double")]
    n = len(sigma) + N
    tokens = initial_tokens(perms)
    third = {s for s in squares(n) if 3 in tokens[s]}
    big = set(squares(n)) - third
    regions = [big] + [{s} for s in third]
    (out / "worked_position.json").write_text(json.dumps(dump(n, 3, tokens, regions), indent=1) + "\n")


def diagram(rows):
    """Boxes (row, col) of a left-justified shape, rows listed top first."""
    return [(a, c) for a, r in enumerate(rows, start=1) for c in range(1, r + 1)]


def is_picture(pairs):
    def ok(pp):
        for a, fa in pp:
            for b, fb in pp:
                if a != b and a[0] <= b[0] and a[1] >= b[1] and not fa < fb:
                    return False
        return True
    return ok(pairs) and ok([(fa, a) for a, fa in pairs])


def first_picture(inner_rows, skew):
    domain = diagram(inner_rows)
    best = None
    for image in itertools.permutations(skew):
        if is_picture(list(zip(domain, image))) and (best is None or list(image) < best):
            best = list(image)
    return domain, best


def worked_grga(out):
    """GRGA on the worked position, first picture in image order."""
    sigma, mu, nu, N = "1010101", "1001011", "0100111", 3
    perms = [encode(sigma, N, "pi"), encode(mu, N, "prime"), encode(nu, N, "double")]
    n = len(sigma) + N
    rows = sigma.count("0")
    tokens = initial_tokens(perms)
    region = {s for s in squares(n) if 3 not in tokens[s]}
    lam1, lam2, lam3 = [1, 2, 3], [4, 4, 5], [6, 6, 7]
    skew = [(a, c) for a in range(1, rows + 1) for c in range(lam2[a - 1] + 1, lam3[a - 1] + 1)]
    domain, image = first_picture(lam1, skew)

    def sq(box):
        return (box[0], rows + box[1])

    # token id -> [current square, destination square, placed]
    toks = {k: [sq(domain[k]), sq(image[k]), False] for k in range(len(domain))}
    filled = set()
    panels, moves = [], []

    def number(t):
        return toks[t][0][0] - toks[t][1][0]

    def snapshot(kind, mv):
        unplaced = sorted([*toks[t][0], number(t)] for t in toks if not toks[t][2])
        placed = sorted(list(toks[t][0]) for t in toks if toks[t][2])
        empty = []
        for b in skew:
            s = sq(b)
            if s not in filled:
                t = next(t for t in toks if toks[t][1] == s)
                empty.append([*s, toks[t][0][0] - s[0]])
        panels.append({"kind": kind, "move": mv, "unplaced": unplaced, "placed": placed,
                       "empty": sorted(empty)})

    def play(i, j):
        nonlocal tokens
        after = move(tokens, region, 1, i, j, n)
        left = {s for s in squares(n) if 1 in tokens[s] and 1 not in after[s]}
        came = {s for s in squares(n) if 1 in after[s] and 1 not in tokens[s]}
        for src in left:
            dst = next(d for d in came if (d[0] == src[0] and src[1] == i and d[1] == j)
                       or (d[1] == src[1] and src[0] == j and d[0] == i))
            t = next(t for t in toks if toks[t][0] == src)
            toks[t][0] = dst
        tokens = after
        moves.append([i, j])
        return {next(t for t in toks if toks[t][0] == d) for d in came}

    snapshot("initial", None)
    while not all(v[2] for v in toks.values()):
        ready = [t for t in toks if not toks[t][2] and number(t) == 0]
        if not ready:
            for i in range(1, rows):
                play(i, i + 1)
            snapshot("step1", None)
            continue
        target = None
        for col in sorted({s[1] for s in map(sq, skew)}, reverse=True):
            open_squares = [sq(b) for b in skew if sq(b)[1] == col and sq(b) not in filled]
            if not open_squares:
                continue
            s = min(open_squares)
            t = next(t for t in toks if toks[t][1] == s)
            if toks[t][0][0] == s[0]:
                target = s
                break
        t = min((t for t in ready if toks[t][0][0] == target[0]), key=lambda t: toks[t][0][1])
        moved = play(toks[t][0][1], target[1])
        for u in moved:
            assert toks[u][0] == toks[u][1]
            toks[u][2] = True
            filled.add(toks[u][0])
        snapshot("step3", moves[-1])

    assert all(len(tokens[s]) == 1 for s in region)
    doc = {"picture": [[list(a), list(b)] for a, b in zip(domain, image)], "moves": moves, "panels": panels}
    (out / "worked_grga.json").write_text(json.dumps(doc) + "\n")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/golden")
    out.mkdir(parents=True, exist_ok=True)
    small_example(out)
    worked_position(out)
    worked_grga(out)


if __name__ == "__main__":
    main()

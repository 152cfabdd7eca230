"""Step counts on the balanced-type family.

Balanced alternating sum/product types of height h have size 2^h - 1;
the decision procedure compares the expanded identity against itself and
against the branch-swapping mirror.  Step counts stay far below the
(hgt X + hgt A) * |X| * |A| envelope, and the largest instance decides in
milliseconds.
"""

import math

from sigmapi.bench import bench_csv, run_bench

rows = run_bench(max_height=10)
print(bench_csv(rows))

print(f"{'pair':<10} {'h':>2} {'steps':>7} {'envelope':>10} {'ratio':>6}")
for r in rows:
    envelope = 2 * r.height * r.size_dom * r.size_cod
    print(f"{r.pair:<10} {r.height:>2} {r.steps:>7} {envelope:>10} {r.steps / envelope:>6.3f}")

xs = [math.log(r.size_dom * r.size_cod) for r in rows]
ys = [math.log(max(r.steps, 1)) for r in rows]
n = len(xs)
mx, my = sum(xs) / n, sum(ys) / n
slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
print(f"\nlog-log slope of steps against |X|*|A|: {slope:.2f}")

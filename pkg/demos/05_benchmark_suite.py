"""A small benchmark suite against the exact optimum, written as CSV.

The same suite is available from the command line:
    stcut bench --sizes 8,12 --seeds 5 --out bench.csv

Run: python3 demos/05_benchmark_suite.py
"""

from stcut.bench import SuiteConfig, records_to_csv, run_suite, summarize

suite = SuiteConfig(sizes=(8, 12), seeds=5)
records = run_suite(suite)
print(records_to_csv(records))
for key, val in summarize(records).items():
    print("%-13s %s" % (key, val))

# larger graphs fall back to the total-weight bound
big = run_suite(SuiteConfig(sizes=(40,), seeds=2, obju_mode="trivial"))
for r in big:
    print("n=%d seed=%d cut=%.0f total=%.0f" % (r.n, r.seed, r.objm, r.obju))

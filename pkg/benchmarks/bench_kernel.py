"""Benchmark the reduction kernels: compiled extension vs pure Python.

Each workload runs in a fresh subprocess per backend (the backend is chosen
at import time), timing representative standard-basis computations: local
Milnor numbers, the heavy truncated colength behind a quadruple-point count,
and a global smoothness certificate.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "q2_analyze": """
from germlab.catalog import simple_entry
from germlab.analyzer import analyze
analyze(simple_entry("Q", k=2).germ)
""",
    "table2_VII_mu": """
from germlab.catalog import nonsimple_entry
from germlab.analyzer import analyze
analyze(nonsimple_entry("VII").germ)
""",
    "s12_le_greuel": """
from germlab.catalog import simple_entry
from germlab.germs import build_Dk
from germlab.milnor import milnor_icis
e = simple_entry("S", j=1, k=2)
sp = build_Dk(e.germ, 3)
assert milnor_icis(sp.ideal, 1, route="chain").milnor == 7
""",
    "row_I_quadruple_colength": """
from germlab.catalog import nonsimple_entry
from germlab.germs import build_Dk
from germlab.ideals import colength
e = nonsimple_entry("I")
sp = build_Dk(e.germ, 4)
assert colength(sp.ideal) == 24
""",
    "witness_smoothness_global": """
from fractions import Fraction
from germlab.catalog import simple_entry
from germlab.germs import GermCorank1, build_Dk
from germlab.ideals import affine_is_smooth
from germlab.poly import PolyRing
from germlab.parse import parse_polynomial
ring = PolyRing(("x", "y", "z"), ("s",))
pert = GermCorank1(3, 4, ring, (parse_polynomial("x*z + y*z^2", ring),
                                parse_polynomial("z^3 + y^2*z - s*z", ring)), "Q2s")
p = pert.at_params({"s": Fraction(1)})
for k in (2, 3):
    sp = build_Dk(p, k, local=False)
    assert affine_is_smooth(sp.ideal, sp.expected_dim)
""",
}

RUNNER = """
import json, time, sys
body = sys.stdin.read()
t0 = time.perf_counter()
exec(body, {})
print(json.dumps(time.perf_counter() - t0))
"""


def run(backend: str, body: str) -> float:
    env = dict(os.environ, GERMLAB_KERNEL=backend)
    proc = subprocess.run([sys.executable, "-c", RUNNER], input=body,
                          capture_output=True, text=True, env=env)
    if proc.returncode != 0:
        raise RuntimeError(f"{backend} failed:\n{proc.stderr}")
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    backends = ["py"]
    try:
        import germlab._speedups  # noqa: F401
        backends.insert(0, "c")
    except ImportError:
        print("compiled kernel not built; timing the pure backend only")
    print(f"{'workload':28} " + " ".join(f"{b:>10}" for b in backends) +
          ("    speedup" if len(backends) == 2 else ""))
    for name, body in WORKLOADS.items():
        times = {}
        for b in backends:
            times[b] = min(run(b, body) for _ in range(args.repeat))
        row = f"{name:28} " + " ".join(f"{times[b]:9.2f}s" for b in backends)
        if len(backends) == 2:
            row += f"    {times['py'] / times['c']:6.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())

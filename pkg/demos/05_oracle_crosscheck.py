import os
import time

from stackycovers import _mutation
from stackycovers.oracle import SweepBox
from stackycovers.verify import run_verify

t0 = time.perf_counter()
report = run_verify()
print("\n".join(report.lines()))
print(f"{time.perf_counter() - t0:.2f}s")

# break one shortcut on purpose and watch the oracle notice
os.environ[_mutation.ENV_VAR] = "zlt13"
small = SweepBox(d1=(4, 9), d2=(4, 9))
print("\n".join(run_verify(small, only=["zlt13"]).lines()))
del os.environ[_mutation.ENV_VAR]

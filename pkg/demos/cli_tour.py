# The erpart command, driven from Python so the session is reproducible.

import subprocess
import sys

runs = [
    "classify --e 1 --r 2 2+3+4",
    "classify --e 1 --r 2 3+3+3 --oracle --format plain",
    "enumerate --m 9 --e 1 --r 2 --minimal",
    "count --m 9 --e 1 --r 2",
    "count --m 9 --e 1 --r 2 --minimal --method series",
    "series --kind R --n 2 --e 1 --r 2 --format plain",
    "table --m 38..40 --e 0 --r 2 --minimal --verify",
    "enumerate --m 20 --e 0 --r 1 --limit 5",
]

for args in runs:
    done = subprocess.run([sys.executable, "-m", "erpart", *args.split()], capture_output=True, text=True)
    print(f"$ erpart {args}   [exit {done.returncode}]")
    print(done.stdout, end="")

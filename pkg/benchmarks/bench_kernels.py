"""Time the compiled and pure-Python kernels on identical inputs.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from msgraph import kernels
from msgraph.core import ms_from_text
from msgraph.gen import GenSpec, gen_constant, gen_random, random_multisign, rng_for, switch


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def cases():
    for n in (8, 9, 10):
        g = gen_random(GenSpec(n, 4, seed=n))
        yield f"hamiltonian_tally n={n} m=4", "hamiltonian_tally", g
    rng = rng_for(1, 2)
    for n in (64, 128, 256):
        theta = [random_multisign(rng, 64) for _ in range(n)]
        g = switch(gen_constant(n, 64, ms_from_text("-" * 64)), theta)
        yield f"triangle_sweep n={n} m=64 (full)", "triangle_sweep", g
        # a switched identity graph is balanced, so the whole edge set is checked
        g = switch(gen_constant(n, 64, ms_from_text("+" * 64)), theta)
        yield f"potential_violation n={n} m=64 (full)", "potential_violation", g


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [kernels.python_backend]
    if kernels.compiled_backend is None:
        print("compiled kernels not built; timing the Python backend only")
    else:
        backends.append(kernels.compiled_backend)

    print(f"{'case':40s} " + " ".join(f"{b.BACKEND:>12s}" for b in backends) + "   speedup")
    for label, name, g in cases():
        timings = []
        results = []
        for b in backends:
            fn = getattr(b, name)
            elapsed, result = best_of(lambda: fn(g.n, g.edges), args.repeat)
            timings.append(elapsed)
            results.append(result)
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        speedup = f"{timings[0] / timings[-1]:8.1f}x" if len(timings) > 1 else ""
        print(f"{label:40s} " + " ".join(f"{t * 1000:10.2f}ms" for t in timings) + f"  {speedup}")


if __name__ == "__main__":
    main()

"""TSP local search toolkit.

Local search algorithms (k-Opt, k-improv, parameterized Lin-Kernighan),
high-girth graph machinery, adversarial lower-bound instance factories, and
independent local-optimality certifiers with brute-force oracles at desk
scale.
"""

__version__ = "0.1.0"

"""Search for arithmetic-progression congruences in the weighted counts.

Walks a grid of (t, k, r, a) chains, expands each to the configured order
once, and tests every residue class n = step*m + residue against every
modulus.  Hits implied by an already-reported hit (a divisor modulus on the
same class, or the same class seen through a coarser step) are suppressed,
and classes whose coefficients are identically zero are skipped outright.
Survivors are re-verified through the scanner used by the CLI before they
are printed, so the search path and the reported claim never share code.

Run:  python3 scripts/congruence_search.py [--n-max 200] [--t-max 6] ...
"""

import argparse
from dataclasses import dataclass, field

from macmahon.identities import CongruenceClaim, congruence_scan
from macmahon.sums import u_series


@dataclass
class SearchConfig:
    t_max: int = 6
    k_max: int = 3
    r_max: int = 2
    a_values: tuple = (-2, -1, 0, 1, 2)
    moduli: tuple = (2, 3, 4, 5, 6, 7, 8, 9)
    steps: tuple = (2, 3, 4, 5, 6, 7, 8, 9)
    n_max: int = 200
    # a class must contain this many nonzero coefficients to count;
    # anything sparser proves nothing at this range
    min_support: int = 10


@dataclass(frozen=True)
class Hit:
    t: int
    k: int
    r: int
    a: int
    modulus: int
    step: int
    residue: int

    def implied_by(self, other: "Hit") -> bool:
        if (self.t, self.k, self.r, self.a) != (other.t, other.k, other.r, other.a):
            return False
        if other.modulus % self.modulus:
            return False
        return (self.step % other.step == 0
                and self.residue % other.step == other.residue)


def scan_chain(t, k, r, a, config):
    coeffs = u_series(t, k, r, a, config.n_max + 1).coeffs
    hits = []
    for step in config.steps:
        for residue in range(step):
            window = coeffs[residue::step]
            support = sum(1 for c in window if c)
            if support < config.min_support:
                continue
            for modulus in sorted(config.moduli, reverse=True):
                if all(c % modulus == 0 for c in window):
                    hit = Hit(t, k, r, a, modulus, step, residue)
                    if not any(hit.implied_by(h) for h in hits):
                        hits.append(hit)
                    break
    return hits


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SearchConfig()
    parser.add_argument("--t-max", type=int, default=defaults.t_max)
    parser.add_argument("--k-max", type=int, default=defaults.k_max)
    parser.add_argument("--r-max", type=int, default=defaults.r_max)
    parser.add_argument("--n-max", type=int, default=defaults.n_max)
    parser.add_argument("--min-support", type=int, default=defaults.min_support)
    args = parser.parse_args()
    config = SearchConfig(t_max=args.t_max, k_max=args.k_max, r_max=args.r_max,
                          n_max=args.n_max, min_support=args.min_support)

    found = 0
    for a in config.a_values:
        for t in range(1, config.t_max + 1):
            for k in range(1, config.k_max + 1):
                for r in range(1, config.r_max + 1):
                    for hit in scan_chain(t, k, r, a, config):
                        claim = CongruenceClaim(hit.t, hit.k, hit.r, hit.a,
                                                hit.modulus, hit.step, hit.residue)
                        report = congruence_scan(claim, config.n_max)
                        status = "confirmed" if report.ok else "RETRACTED"
                        print(f"{claim.claim}  [{status} for n <= {config.n_max}]")
                        found += 1
    print(f"{found} congruences found")


if __name__ == "__main__":
    main()

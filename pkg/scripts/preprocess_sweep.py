#! python3.11

#    This module is a part of the ftpolytope package.
#
#    This program is libre software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
#    See the LICENSE file for more details.

'''
Sweep random instances through the preprocessing step: add one to every element when s_max is even, then check that
the result has no degenerate vertex and the same Exact Partition answer as the original.

By default 500 instances spread over 2m = 4, 6, 8 with elements in [1, 20].
'''

import argparse
from collections import Counter
import logging
import random

from ftpolytope.library import FTArgs, random_instance, run_batch, verify_preprocessing

logging.basicConfig(
    format="%(levelname)s [%(asctime)s] %(name)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
    level=logging.INFO
)

########################################################################################################################

def make_instances(args):
    rng = random.Random(args.seed)
    return [random_instance(rng, rng.choice(args.sizes), high=args.max_value) for _ in range(args.count)]

def main(args):
    instances = make_instances(args)
    print(f"sweeping {len(instances)} instances, sizes {args.sizes}, seed {args.seed}")
    reports = run_batch(instances, verify_preprocessing, args.concurrency)

    by_size = Counter(inst.size for inst in instances)
    failures = [r for r in reports if not r.holds]
    even = sum(inst.s_max % 2 == 0 for inst in instances)
    print(f"per size: {dict(sorted(by_size.items()))}; {even} had even s_max and were shifted")
    for r in failures:
        print(f"FAIL on {r.elements}: {len(r.witnesses)} witnesses")
    print(f"{len(reports) - len(failures)}/{len(reports)} pass")
    return 1 if failures else 0


parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
FTArgs.add_args_to_parser(parser, FTArgs.Seed, FTArgs.MaxValue, FTArgs.Concurrency)
FTArgs.Count.add_to_parser(parser, default=500, help="number of instances (default: %(default)s)")
FTArgs.Sizes.add_to_parser(parser, default=[4, 6, 8], help="instance sizes 2m to draw from (default: 4,6,8)")

if __name__ == '__main__':
    args = parser.parse_args()
    raise SystemExit(main(args))

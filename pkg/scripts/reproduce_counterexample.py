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
The four-element instance whose P_R is not simple, side by side with its odd-s_max control.

{3,3,4,2} has the exact partition {3,3}|{4,2} and s_4 = 2 = s_max/2, so P_R has a degenerate vertex
(1, 1, 0, 1/390) lying on five constraints with six neighbours. Subtracting one from every element gives {2,2,3,1},
whose s_max is odd, and whose P_R is simple. Optionally writes both .ine files for external tools.
'''

import argparse
import logging
from pathlib import Path

from ftpolytope.core import new_instance
from ftpolytope.cdd import format_ine
from ftpolytope.cli import format_report
from ftpolytope.library import FTArgs, analyze

logging.basicConfig(
    format="%(levelname)s [%(asctime)s] %(name)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
    level=logging.INFO
)

########################################################################################################################

def main(args):
    raw = new_instance(args.elements)
    degenerate = analyze(raw, max_dim=args.max_dim)
    control = analyze(raw, preprocess='down', max_dim=args.max_dim)

    for title, report in (("instance", degenerate), ("control", control)):
        print(f"==== {title} ====")
        print(format_report(report))
        print()

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for report in (degenerate, control):
            name = out / f"P_R_{'_'.join(map(str, report.instance.elements))}.ine"
            name.write_text(format_ine(report.constraints, f"P_R for {report.instance.elements}"))
            print(f"wrote {name}")

    ok = len(degenerate.degenerate) == 1 and not control.degenerate and degenerate.passed and control.passed
    print("reproduced" if ok else "NOT reproduced")
    return 0 if ok else 1


parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
parser.add_argument('elements', nargs='*', type=int, default=[3, 3, 4, 2],
                    help="the instance (default: 3 3 4 2); the control subtracts one from each element")
FTArgs.Out.add_to_parser(parser, help="directory to write both .ine files to")
FTArgs.MaxDim.add_to_parser(parser)

if __name__ == '__main__':
    args = parser.parse_args()
    raise SystemExit(main(args))

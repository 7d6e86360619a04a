# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.



"""
The purpose of this python3 script is to create parser
and run 'verify' command.
"""


import argparse
import numpy as np
import os
from ..constants import VerificationSuites
from ..default import *
from ..exceptions import VerificationError
from ..logging import get_logger
from ..main import verify
from ..utilities import parse_int_list, resolve_out_dir, write_json_file


logger = get_logger(__name__)


def add_cli_verify_arg_parser(
        sub_parsers: argparse._SubParsersAction
) -> argparse._SubParsersAction:
    """
    Adds 'verify' parser.
    """
    parser = sub_parsers.add_parser('verify', help='Run an invariant suite or conjecture sweep.')
    parser._action_groups.pop()

    # Required arguments
    parser_required = parser.add_argument_group('required arguments')
    parser_required.add_argument(
        "suite",
        type=str,
        choices=VerificationSuites.ALL,
        help="Suite to run."
    )

    # Optional arguments
    parser_optional = parser.add_argument_group('optional arguments')
    parser_optional.add_argument(
        "--dims",
        dest="dims",
        type=str,
        required=False,
        help="Comma-separated qudit dimensions (default: 2,4,8 for qudit, 8 for conjectures)."
    )
    parser_optional.add_argument(
        "--samples",
        dest="samples",
        type=int,
        default=SAMPLE_COUNT,
        required=False,
        help="Random samples per check (default: %i)." % SAMPLE_COUNT
    )
    parser_optional.add_argument(
        "--drive-count",
        dest="drive_count",
        type=int,
        default=DRIVE_COUNT,
        required=False,
        help="Random PINEM drives per dimension in the qudit suite (default: %i)." % DRIVE_COUNT
    )
    parser_optional.add_argument(
        "--seed",
        dest="seed",
        type=int,
        default=RANDOM_SEED,
        required=False,
        help="Random seed (default: %i)." % RANDOM_SEED
    )
    parser_optional.add_argument(
        "--max-coupling",
        dest="max_coupling",
        type=float,
        default=np.pi,
        required=False,
        help="Largest |g| of random ladder drives; 0 checks the empty drive (default: pi)."
    )
    parser_optional.add_argument(
        "--swap-search",
        dest="swap_search",
        action='store_true',
        help="Include the nearest-neighbor SWAP search in the conjectures suite."
    )
    parser_optional.add_argument(
        "--num-threads",
        dest="num_threads",
        type=int,
        default=NUM_THREADS,
        required=False,
        help="Number of threads (default: %i)." % NUM_THREADS
    )
    parser_optional.add_argument(
        "--out", '-o',
        dest="out",
        type=str,
        required=False,
        help="Output directory (default: $%s, then the working directory)." % OUT_DIR_ENV_VAR
    )

    parser.set_defaults(which='verify')
    return sub_parsers


def run_cli_verify_from_parsed_args(args: argparse.Namespace):
    """
    Run 'verify' command using parameters from parsed arguments.

    Parameters:
        args    :   argparse.Namespace object with the following variables:
                    suite
                    dims
                    samples
                    drive_count
                    seed
                    max_coupling
                    swap_search
                    num_threads
                    out
    """
    dims = parse_int_list(args.dims) if args.dims is not None else None
    report = verify(
        suite=args.suite,
        dims=dims,
        samples=args.samples,
        seed=args.seed,
        swap_search=args.swap_search,
        num_threads=args.num_threads,
        max_coupling=args.max_coupling,
        drive_count=args.drive_count
    )
    out_dir = resolve_out_dir(args.out)
    write_json_file(report, os.path.join(out_dir, 'verify_%s.json' % args.suite))
    if not report['passed']:
        failed = [check['name'] for check in report['checks'] if not check['passed']]
        raise VerificationError('Suite %s failed checks: %s' % (args.suite, ', '.join(failed)))

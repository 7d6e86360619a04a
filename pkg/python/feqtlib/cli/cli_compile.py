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
and run 'compile' command.
"""


import argparse
import os
from ..constants import NamedGates
from ..default import *
from ..exceptions import CompilationError, ConfigError
from ..logging import get_logger
from ..main import compile_gate
from ..template import Template
from ..utilities import parse_int_list, resolve_out_dir, str2bool, write_json_file


logger = get_logger(__name__)


def add_cli_compile_arg_parser(
        sub_parsers: argparse._SubParsersAction
) -> argparse._SubParsersAction:
    """
    Adds 'compile' parser.
    """
    parser = sub_parsers.add_parser('compile', help='Compile a two-qubit gate into PINEM and FSP steps.')
    parser._action_groups.pop()

    # Required arguments
    parser_required = parser.add_argument_group('required arguments')
    parser_required.add_argument(
        "gate",
        type=str,
        choices=NamedGates.ALL + list(NamedGates.ALIASES.keys()),
        help="Target gate."
    )

    # Optional arguments
    parser_optional = parser.add_argument_group('optional arguments')
    parser_optional.add_argument(
        "--angles",
        dest="angles",
        type=float,
        nargs='+',
        required=False,
        help="Rotation angles in radians: two for rz_pair, one for rx_1."
    )
    parser_optional.add_argument(
        "--n-pinem",
        dest="n_pinem",
        type=int,
        required=False,
        help="Number of PINEM interactions of a custom template "
             "(hadamard_1, cnot_21 and swap only)."
    )
    parser_optional.add_argument(
        "--fsp-pattern",
        dest="fsp_pattern",
        type=str,
        required=False,
        help="Fixed FSP step counts of a custom template, comma-separated (e.g. 2,2)."
    )
    parser_optional.add_argument(
        "--fsp-choices",
        dest="fsp_choices",
        type=str,
        default=','.join(str(n) for n in FSP_STEP_CHOICES),
        required=False,
        help="FSP step counts enumerated by a custom template (default: %s)."
             % ','.join(str(n) for n in FSP_STEP_CHOICES)
    )
    parser_optional.add_argument(
        "--harmonics",
        dest="harmonics",
        type=str,
        default=','.join(str(j) for j in HARMONICS),
        required=False,
        help="Laser harmonics of a custom template (default: %s)." % ','.join(str(j) for j in HARMONICS)
    )
    parser_optional.add_argument(
        "--trailing-fsp",
        dest="trailing_fsp",
        type=str2bool,
        default=False,
        required=False,
        help="If 'yes', a custom template ends with a drift (default: no)."
    )
    parser_optional.add_argument(
        "--n-starts",
        dest="n_starts",
        type=int,
        default=NUM_STARTS,
        required=False,
        help="Starts per FSP pattern (default: %i)." % NUM_STARTS
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
        "--threshold",
        dest="threshold",
        type=float,
        default=CONVERGENCE_THRESHOLD,
        required=False,
        help="Infidelity below which the search has converged (default: %g)." % CONVERGENCE_THRESHOLD
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
        "--best-effort",
        dest="best_effort",
        action='store_true',
        help="Exit with 0 even if the search did not converge."
    )
    parser_optional.add_argument(
        "--out", '-o',
        dest="out",
        type=str,
        required=False,
        help="Output directory (default: $%s, then the working directory)." % OUT_DIR_ENV_VAR
    )

    parser.set_defaults(which='compile')
    return sub_parsers


def run_cli_compile_from_parsed_args(args: argparse.Namespace):
    """
    Run 'compile' command using parameters from parsed arguments.

    Parameters:
        args    :   argparse.Namespace object with the following variables:
                    gate
                    angles
                    n_pinem
                    fsp_pattern
                    fsp_choices
                    harmonics
                    trailing_fsp
                    n_starts
                    seed
                    threshold
                    num_threads
                    best_effort
                    out
    """
    # Step 1. Build template
    template = None
    if args.n_pinem is not None:
        template = Template(
            n_pinem=args.n_pinem,
            fsp_pattern=tuple(parse_int_list(args.fsp_pattern)) if args.fsp_pattern is not None else None,
            fsp_choices=tuple(parse_int_list(args.fsp_choices)),
            harmonics=tuple(parse_int_list(args.harmonics)),
            trailing_fsp=args.trailing_fsp
        )
    elif args.fsp_pattern is not None:
        raise ConfigError('--fsp-pattern requires --n-pinem.')

    # Step 2. Compile
    report = compile_gate(
        name=args.gate,
        angles=args.angles,
        template=template,
        n_starts=args.n_starts,
        seed=args.seed,
        threshold=args.threshold,
        num_threads=args.num_threads
    )
    logger.info('Compiled %s with %i PINEM interactions; infidelity %.3e.'
                % (report.target_name, report.n_pinem, report.infidelity))

    # Step 3. Write outputs
    out_dir = resolve_out_dir(args.out)
    report.schedule.write_json_file(os.path.join(out_dir, 'schedule.json'))
    report.write_json_file(os.path.join(out_dir, 'compile_report.json'))
    if not report.converged and not args.best_effort:
        raise CompilationError('Compilation of %s did not converge (infidelity %.3e, threshold %.1e).'
                               % (report.target_name, report.infidelity, report.threshold))

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
and run 'simulate' command.
"""


import argparse
import dataclasses
import os
from ..default import *
from ..logging import get_logger
from ..main import simulate
from ..run_config import RunConfig
from ..utilities import resolve_out_dir, write_csv_file, write_json_file


logger = get_logger(__name__)


def add_cli_simulate_arg_parser(
        sub_parsers: argparse._SubParsersAction
) -> argparse._SubParsersAction:
    """
    Adds 'simulate' parser.
    """
    parser = sub_parsers.add_parser('simulate', help='Run a PINEM/FSP schedule on the energy ladder.')
    parser._action_groups.pop()

    # Required arguments
    parser_required = parser.add_argument_group('required arguments')
    parser_required.add_argument(
        "--config", '-c',
        dest="config",
        type=str,
        required=True,
        help="Run configuration JSON file."
    )

    # Optional arguments
    parser_optional = parser.add_argument_group('optional arguments')
    parser_optional.add_argument(
        "--out", '-o',
        dest="out",
        type=str,
        required=False,
        help="Output directory (default: config 'out_dir', then $%s, then the working directory)."
             % OUT_DIR_ENV_VAR
    )
    parser_optional.add_argument(
        "--seed",
        dest="seed",
        type=int,
        required=False,
        help="Random seed; overrides the config 'seed'."
    )
    parser_optional.add_argument(
        "--n-starts",
        dest="n_starts",
        type=int,
        default=NUM_STARTS,
        required=False,
        help="Starts per FSP pattern when a program compiles its gates (default: %i)." % NUM_STARTS
    )
    parser_optional.add_argument(
        "--num-threads",
        dest="num_threads",
        type=int,
        default=NUM_THREADS,
        required=False,
        help="Number of threads (default: %i)." % NUM_THREADS
    )

    parser.set_defaults(which='simulate')
    return sub_parsers


def run_cli_simulate_from_parsed_args(args: argparse.Namespace):
    """
    Run 'simulate' command using parameters from parsed arguments.

    Parameters:
        args    :   argparse.Namespace object with the following variables:
                    config
                    out
                    seed
                    n_starts
                    num_threads
    """
    # Step 1. Load run configuration
    config = RunConfig.read_json_file(json_file=args.config)
    if args.seed is not None:
        config = dataclasses.replace(config, seed=args.seed)
    out_dir = resolve_out_dir(args.out, config.out_dir)
    logger.info('Loaded run configuration %s.' % args.config)

    # Step 2. Simulate
    result = simulate(config=config, n_starts=args.n_starts, num_threads=args.num_threads)

    # Step 3. Write outputs
    write_csv_file(result.spectrum_dataframe(), os.path.join(out_dir, 'spectrum.csv'))
    write_json_file(result.qudit_state_dict(), os.path.join(out_dir, 'qudit_state.json'))
    if result.trajectory is not None:
        write_csv_file(result.trajectory, os.path.join(out_dir, 'trajectory.csv'))

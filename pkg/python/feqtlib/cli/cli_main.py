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
The purpose of this python3 script is to implement the primary FEQT command.
"""


import argparse
import feqtlib
import logging
import sys
from typing import List, Optional, Tuple
from .cli_compile import *
from .cli_export import *
from .cli_simulate import *
from .cli_verify import *
from ..constants import ExitCodes
from ..exceptions import CompilationError, ConfigError, FeqtError, TruncationError, VerificationError
from ..logging import get_logger, set_log_level


logger = get_logger(__name__)


def init_arg_parser() -> Tuple[argparse.ArgumentParser, argparse._SubParsersAction]:
    """
    Initialize the input argument parser.

    Returns:
        Tuple[argparse.ArgumentParser,argparse.ArgumentParser subparsers]
    """
    arg_parser = argparse.ArgumentParser(
        description="FEQT: Free-Electron Qudit Toolkit."
    )
    arg_parser.add_argument(
        '--version', '-v',
        action='version',
        version='%(prog)s version ' + str(feqtlib.__version__)
    )
    arg_parser.add_argument(
        '--verbose',
        action='store_true',
        help='Log debug messages.'
    )
    sub_parsers = arg_parser.add_subparsers(help='FEQT sub-commands.')
    return arg_parser, sub_parsers


def exit_code(error: Exception) -> int:
    if isinstance(error, (TruncationError, VerificationError)):
        return ExitCodes.NUMERIC_BUDGET
    if isinstance(error, CompilationError):
        return ExitCodes.NOT_CONVERGED
    return ExitCodes.CONFIG_ERROR


def main(argv: Optional[List[str]] = None) -> int:
    # Step 1. Initialize argument parser
    arg_parser, sub_parsers = init_arg_parser()
    sub_parsers = add_cli_compile_arg_parser(sub_parsers=sub_parsers)     # compile
    sub_parsers = add_cli_export_arg_parser(sub_parsers=sub_parsers)      # export
    sub_parsers = add_cli_simulate_arg_parser(sub_parsers=sub_parsers)    # simulate
    sub_parsers = add_cli_verify_arg_parser(sub_parsers=sub_parsers)      # verify
    try:
        args = arg_parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version exit with 0, usage errors with 2
        return ExitCodes.SUCCESS if e.code in (0, None) else ExitCodes.CONFIG_ERROR
    if not hasattr(args, 'which'):
        arg_parser.print_usage()
        return ExitCodes.CONFIG_ERROR
    if args.verbose:
        set_log_level(logging.DEBUG)

    # Step 2. Execute function based on CLI arguments
    try:
        if args.which == 'compile':
            run_cli_compile_from_parsed_args(args=args)
        elif args.which == 'export':
            run_cli_export_from_parsed_args(args=args)
        elif args.which == 'simulate':
            run_cli_simulate_from_parsed_args(args=args)
        elif args.which == 'verify':
            run_cli_verify_from_parsed_args(args=args)
        else:
            raise ConfigError("Invalid command: %s" % args.which)
    except (FeqtError, OSError, ValueError) as e:
        logger.error(str(e))
        return exit_code(e)
    return ExitCodes.SUCCESS


def run():
    sys.exit(main())

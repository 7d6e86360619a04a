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
and run 'export' command.
"""


import argparse
import os
from ..default import *
from ..gate_schedule import GateSchedule
from ..logging import get_logger
from ..main import export_schedule
from ..physical_params import PhysicalParams
from ..utilities import resolve_out_dir, write_json_file


logger = get_logger(__name__)


def add_cli_export_arg_parser(
        sub_parsers: argparse._SubParsersAction
) -> argparse._SubParsersAction:
    """
    Adds 'export' parser.
    """
    parser = sub_parsers.add_parser('export', help='Convert a schedule into physical drift lengths.')
    parser._action_groups.pop()

    # Required arguments
    parser_required = parser.add_argument_group('required arguments')
    parser_required.add_argument(
        "--schedule", '-s',
        dest="schedule",
        type=str,
        required=True,
        help="Schedule JSON file."
    )

    # Optional arguments
    parser_optional = parser.add_argument_group('optional arguments')
    parser_optional.add_argument(
        "--kinetic-energy-ev",
        dest="kinetic_energy_ev",
        type=float,
        default=KINETIC_ENERGY_EV,
        required=False,
        help="Electron kinetic energy in eV (default: %g)." % KINETIC_ENERGY_EV
    )
    parser_optional.add_argument(
        "--photon-energy-ev",
        dest="photon_energy_ev",
        type=float,
        default=PHOTON_ENERGY_EV,
        required=False,
        help="Photon energy of the fundamental harmonic in eV (default: %g)." % PHOTON_ENERGY_EV
    )
    parser_optional.add_argument(
        "--energy-spread-ev",
        dest="energy_spread_ev",
        type=float,
        default=ENERGY_SPREAD_EV,
        required=False,
        help="Initial electron energy spread in eV (default: %g)." % ENERGY_SPREAD_EV
    )
    parser_optional.add_argument(
        "--z-dispersion",
        dest="z_dispersion",
        type=float,
        required=False,
        help="Dispersion length z_D in meters; overrides the value derived from the energies."
    )
    parser_optional.add_argument(
        "--out", '-o',
        dest="out",
        type=str,
        required=False,
        help="Output directory (default: $%s, then the working directory)." % OUT_DIR_ENV_VAR
    )

    parser.set_defaults(which='export')
    return sub_parsers


def run_cli_export_from_parsed_args(args: argparse.Namespace):
    """
    Run 'export' command using parameters from parsed arguments.

    Parameters:
        args    :   argparse.Namespace object with the following variables:
                    schedule
                    kinetic_energy_ev
                    photon_energy_ev
                    energy_spread_ev
                    z_dispersion
                    out
    """
    schedule = GateSchedule.read_json_file(json_file=args.schedule)
    params = PhysicalParams.from_energies(
        kinetic_energy_ev=args.kinetic_energy_ev,
        photon_energy_ev=args.photon_energy_ev,
        energy_spread_ev=args.energy_spread_ev,
        z_dispersion_override=args.z_dispersion
    )
    physical = export_schedule(schedule=schedule, params=params)
    logger.info('Exported %i steps; total drift %.6e m.' % (len(physical.steps), physical.total_drift_length))
    out_dir = resolve_out_dir(args.out)
    write_json_file(physical.to_dict(), os.path.join(out_dir, 'physical_schedule.json'))

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
The purpose of this python3 script is to implement the PhysicalParams dataclass.
"""


import math
from dataclasses import dataclass
from typing import Dict, Optional
from .constants import PhysicalConstants
from .exceptions import InvalidInputError
from .logging import get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class PhysicalParams:
    """
    Electron kinematics and laser frequency. Only used to report drift lengths in meters.

    beta                    :   v/c.
    lorentz_gamma           :   1/sqrt(1 - beta^2).
    v                       :   Electron speed (m/s).
    omega                   :   Fundamental laser angular frequency (rad/s).
    omega_C                 :   Compton angular frequency (rad/s).
    E0                      :   Kinetic energy (eV), metadata.
    dE0                     :   Energy spread (eV), metadata.
    z_dispersion_override   :   User-supplied dispersion length (m).
    """
    beta: float
    lorentz_gamma: float
    v: float
    omega: float
    omega_C: float = PhysicalConstants.COMPTON_ANGULAR_FREQUENCY
    E0: Optional[float] = None
    dE0: Optional[float] = None
    z_dispersion_override: Optional[float] = None

    def __post_init__(self):
        if not 0 < self.beta < 1:
            raise InvalidInputError('beta must lie in (0, 1): %f' % self.beta)
        if abs(self.lorentz_gamma - 1.0 / math.sqrt(1.0 - self.beta ** 2)) > 1e-12 * self.lorentz_gamma:
            raise InvalidInputError('Lorentz factor %.15f inconsistent with beta %.15f.'
                                    % (self.lorentz_gamma, self.beta))
        if abs(self.v - self.beta * PhysicalConstants.SPEED_OF_LIGHT) > 1e-9 * self.v:
            raise InvalidInputError('Speed %f inconsistent with beta %f.' % (self.v, self.beta))
        if self.omega <= 0 or self.omega_C <= 0:
            raise InvalidInputError('Angular frequencies must be positive.')
        if self.z_dispersion_override is not None and self.z_dispersion_override <= 0:
            raise InvalidInputError('Dispersion length override must be positive: %f' % self.z_dispersion_override)

    @classmethod
    def from_beta(
            cls,
            beta: float,
            omega: float,
            E0: Optional[float] = None,
            dE0: Optional[float] = None,
            z_dispersion_override: Optional[float] = None
    ) -> 'PhysicalParams':
        return cls(
            beta=beta,
            lorentz_gamma=1.0 / math.sqrt(1.0 - beta ** 2),
            v=beta * PhysicalConstants.SPEED_OF_LIGHT,
            omega=omega,
            E0=E0,
            dE0=dE0,
            z_dispersion_override=z_dispersion_override
        )

    @classmethod
    def from_energies(
            cls,
            kinetic_energy_ev: float,
            photon_energy_ev: float,
            energy_spread_ev: Optional[float] = None,
            z_dispersion_override: Optional[float] = None
    ) -> 'PhysicalParams':
        """
        Derives kinematics from the electron kinetic energy and the laser photon energy.

        Parameters:
            kinetic_energy_ev       :   Electron kinetic energy (eV).
            photon_energy_ev        :   Photon energy of the fundamental harmonic (eV).
            energy_spread_ev        :   Initial energy spread (eV).
            z_dispersion_override   :   Dispersion length to report instead of the derived one (m).

        Returns:
            PhysicalParams
        """
        if kinetic_energy_ev <= 0 or photon_energy_ev <= 0:
            raise InvalidInputError('Energies must be positive.')
        lorentz_gamma = 1.0 + kinetic_energy_ev / PhysicalConstants.ELECTRON_REST_ENERGY_EV
        beta = math.sqrt(1.0 - 1.0 / lorentz_gamma ** 2)
        return cls(
            beta=beta,
            lorentz_gamma=1.0 / math.sqrt(1.0 - beta ** 2),
            v=beta * PhysicalConstants.SPEED_OF_LIGHT,
            omega=photon_energy_ev / PhysicalConstants.HBAR_EV_S,
            E0=kinetic_energy_ev,
            dE0=energy_spread_ev,
            z_dispersion_override=z_dispersion_override
        )

    @property
    def photon_energy_ev(self) -> float:
        return PhysicalConstants.HBAR_EV_S * self.omega

    @property
    def is_valid_regime(self) -> Optional[bool]:
        """
        E0 >> hbar*omega > dE0, checked as E0/(hbar*omega) > 1e3 and hbar*omega/dE0 > 1.
        None when the energies are not recorded.
        """
        if self.E0 is None or self.dE0 is None:
            return None
        if self.dE0 <= 0:
            return self.E0 / self.photon_energy_ev > 1e3
        return self.E0 / self.photon_energy_ev > 1e3 and self.photon_energy_ev / self.dE0 > 1

    def to_dict(self) -> Dict:
        return {
            'beta': self.beta,
            'lorentz_gamma': self.lorentz_gamma,
            'v': self.v,
            'omega': self.omega,
            'omega_C': self.omega_C,
            'E0': self.E0,
            'dE0': self.dE0,
            'z_dispersion_override': self.z_dispersion_override
        }

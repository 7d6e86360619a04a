import json
import os
from typing import Dict


def get_data_path(name: str) -> str:
    """
    Returns the absolute path to a fixture under test/data (run configurations and schedules).
    """
    return os.path.join(os.path.dirname(__file__), "data", name)


def read_json(path: str) -> Dict:
    """
    Reads a JSON file written by a feqt command.

    Parameters:
        path    :   Path to a JSON file.

    Returns:
        Parsed JSON object.
    """
    with open(path) as f:
        return json.load(f)

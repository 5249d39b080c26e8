# PARABOLA - Betti tables of edge ideals and templates of graphs
# Copyright (C) 2019 SCP-079 <https://scp-079.org>
#
# This file is part of PARABOLA.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published
# by the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import logging
from os.path import exists
from shutil import copyfile
from typing import Iterable, List, Optional

from .. import glovar
from .decorators import threaded
from .errors import InputError
from .graph import Graph, from_graph6, to_graph6

# Enable logging
logger = logging.getLogger(__name__)


def read_graph6_file(path: str) -> List[Graph]:
    # One graph6 string per line, blank lines skipped
    with open(path, "r", encoding="ascii") as f:
        lines = [line.strip() for line in f]

    result = []

    for number, line in enumerate(lines, start=1):
        if not line:
            continue

        try:
            result.append(from_graph6(line))
        except InputError as e:
            raise InputError(f"{path}:{number}: {e}") from e

    return result


def write_graph6_file(path: str, graphs: Iterable[Graph]) -> int:
    # Write graphs one per line, return the count
    count = 0

    with open(path, "w", encoding="ascii") as f:
        for g in graphs:
            f.write(to_graph6(g) + "\n")
            count += 1

    return count


def load_graphs(name: str) -> Optional[List[Graph]]:
    # Read a cached stream from data, falling back to the backup copy
    try:
        try:
            if not exists(f"data/{name}"):
                return None

            return read_graph6_file(f"data/{name}")
        except Exception as e:
            logger.error(f"Load data {name} error: {e}", exc_info=True)

            if not exists(f"data/.{name}"):
                return None

            return read_graph6_file(f"data/.{name}")
    except Exception as e:
        logger.critical(f"Load data {name} backup error: {e}", exc_info=True)

    return None


@threaded(daemon=False)
def save_graphs(name: str, graphs: List[Graph]) -> bool:
    # Save a stream to data, writing the backup first
    result = False

    try:
        with glovar.locks["cache"]:
            write_graph6_file(f"data/.{name}", graphs)
            result = copyfile(f"data/.{name}", f"data/{name}") or True
    except Exception as e:
        logger.warning(f"Save error: {e}", exc_info=True)

    return result

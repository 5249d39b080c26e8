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

import csv
import json
import logging
import sys
from fractions import Fraction
from io import StringIO
from threading import Thread
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from joblib import Parallel, cpu_count, delayed
from tqdm import tqdm

from .. import glovar

# Enable logging
logger = logging.getLogger(__name__)


def effective_jobs(jobs: int) -> int:
    # Number of workers joblib would start
    if jobs < 0:
        return max(1, cpu_count() + 1 + jobs)

    return max(1, jobs)


def format_pairs(pairs: Iterable[Tuple[int, int]]) -> str:
    return " ".join(f"({s},{t})" for s, t in pairs)


def fraction_text(value: Optional[Fraction]) -> str:
    # Exact and decimal form, empty when undefined
    if value is None:
        return ""

    return f"{value.numerator}/{value.denominator} ({float(value):.6f})"


def get_ints(text: str) -> Optional[List[int]]:
    # Get a list of ints from "2,2,3"
    result = None

    try:
        result = [int(part) for part in text.replace(" ", "").split(",") if part]
    except Exception as e:
        logger.info(f"Get ints error: {e}", exc_info=True)

    return result


def lang(text: str) -> str:
    # Get the text
    result = ""

    try:
        result = glovar.lang.get(text, text)
    except Exception as e:
        logger.warning(f"Lang error: {e}", exc_info=True)

    return result


def progress(iterable: Iterable, total: Optional[int] = None, desc: str = "", enabled: bool = False) -> Iterable:
    # Progress bar on standard error, silent unless asked for
    return tqdm(iterable, total=total, desc=desc, disable=not enabled, file=sys.stderr, leave=False)


def run_chunks(target: Callable, chunks: Sequence[tuple], jobs: int = 1) -> List[Any]:
    # Evaluate target on every chunk, results in chunk order
    if effective_jobs(jobs) == 1 or len(chunks) <= 1:
        return [target(*chunk) for chunk in chunks]

    return Parallel(n_jobs=jobs)(delayed(target)(*chunk) for chunk in chunks)


def split_range(total: int, parts: int) -> List[Tuple[int, int]]:
    # Contiguous half-open ranges covering 0..total
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    result = []
    start = 0

    for k in range(parts):
        stop = start + step + (k < extra)
        result.append((start, stop))
        start = stop

    return result


def thread(target: Callable, args: tuple, kwargs: dict = None, daemon: bool = True) -> bool:
    """Start target in a thread, False if it could not be started.

    Cache saves pass daemon=False so the interpreter waits for the graph6 file
    before a short command exits.
    """
    result = False

    try:
        t = Thread(target=target, args=args, kwargs=kwargs, daemon=daemon)
        t.daemon = daemon
        result = t.start() or True
    except Exception as e:
        logger.warning(f"Thread error: {e}", exc_info=True)

    return result


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    # CSV text with a fixed header
    result = ""

    try:
        buffer = StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        result = buffer.getvalue()
    except Exception as e:
        logger.warning(f"To csv error: {e}", exc_info=True)

    return result


def to_json(data: Any) -> str:
    # Byte-deterministic JSON
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ": "))

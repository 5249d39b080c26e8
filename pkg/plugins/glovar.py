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
from configparser import RawConfigParser
from os import environ, mkdir
from os.path import exists
from threading import Lock
from typing import Dict, Union

# Enable logging
logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=logging.WARNING,
    filename="log",
    filemode="a"
)
logger = logging.getLogger(__name__)

# Read data from config.ini

# [basic]
cache: Union[bool, str] = "True"
jobs: int = 1
log_level: str = "WARNING"
prime: int = 2
zh_cn: Union[bool, str] = "False"

# [limit]
census_max: int = 9
enum_max: int = 9
full_table: int = 16
meta_max: int = 7
residue_max: int = 12
sample_max: int = 32
special_max: int = 20
tree_max: int = 12

# [census]
samples: int = 1000
seed: int = 0

try:
    config = RawConfigParser()
    config.read("config.ini")

    if config.has_section("basic"):
        # [basic]
        cache = config["basic"].get("cache", cache)
        jobs = int(config["basic"].get("jobs", str(jobs)))
        log_level = config["basic"].get("log_level", log_level)
        prime = int(config["basic"].get("prime", str(prime)))
        zh_cn = config["basic"].get("zh_cn", zh_cn)

    if config.has_section("limit"):
        # [limit]
        census_max = int(config["limit"].get("census_max", str(census_max)))
        enum_max = int(config["limit"].get("enum_max", str(enum_max)))
        full_table = int(config["limit"].get("full_table", str(full_table)))
        meta_max = int(config["limit"].get("meta_max", str(meta_max)))
        residue_max = int(config["limit"].get("residue_max", str(residue_max)))
        sample_max = int(config["limit"].get("sample_max", str(sample_max)))
        special_max = int(config["limit"].get("special_max", str(special_max)))
        tree_max = int(config["limit"].get("tree_max", str(tree_max)))

    if config.has_section("census"):
        # [census]
        samples = int(config["census"].get("samples", str(samples)))
        seed = int(config["census"].get("seed", str(seed)))
except Exception as e:
    logger.warning(f"Read data from config.ini error: {e}", exc_info=True)

# Environment
try:
    jobs = int(environ.get("PARABOLA_JOBS", str(jobs)))
except Exception as e:
    logger.warning(f"Read PARABOLA_JOBS error: {e}", exc_info=True)

cache = cache in {True, "True", "true", "1", "yes"}
zh_cn = zh_cn in {True, "True", "true", "1", "yes"}

# Check
if (prime < 2 or prime >= 2 ** 31 or any(prime % d == 0 for d in range(2, int(prime ** 0.5) + 1))
        or jobs == 0
        or log_level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        or not 0 < full_table <= 16
        or not 0 < enum_max <= 9
        or not 0 < tree_max <= 16
        or not 0 < sample_max <= 64
        or not 0 < residue_max <= 16
        or not 0 < special_max <= 64
        or not 0 < meta_max <= 8
        or not 0 < census_max <= 9
        or samples <= 0):
    logger.critical("No proper settings")
    raise SystemExit("No proper settings")

logging.getLogger().setLevel(log_level)

# Languages
lang: Dict[str, str] = {
    # Basic
    "colon": (zh_cn and "：") or ": ",
    "empty_table": (zh_cn and "空表（边理想为零）") or "empty table (the edge ideal is zero)",
    "field": (zh_cn and "系数域") or "Field",
    "note": (zh_cn and "备注") or "Note",
    # Betti
    "column": (zh_cn and "列") or "column",
    "diff_match": (zh_cn and "与预期数值一致") or "matches the expected values",
    "diff_mismatch": (zh_cn and "与预期数值不符") or "differs from the expected values",
    "regularity": (zh_cn and "正则度") or "Regularity",
    "row": (zh_cn and "行") or "row",
    # Templates
    "cover_none": (zh_cn and "无覆盖") or "no cover",
    "desk_verdict": (zh_cn and "有限范围判定") or "desk verdict",
    "witnessing": (zh_cn and "见证对") or "witnessing",
    # Experiments
    "greedy": (zh_cn and "贪心导出匹配") or "greedy induced matching",
    "maximum": (zh_cn and "最大导出匹配") or "maximum induced matching",
    "sampled": (zh_cn and "带标号随机抽样 G(n, 1/2)") or "labeled G(n, 1/2) samples",
    "exhaustive": (zh_cn and "无标号穷举") or "unlabeled exhaustive"
}

# Init

locks: Dict[str, Lock] = {
    "cache": Lock()
}

sender: str = "PARABOLA"

version: str = "0.1.0"

# Init dir
for path in ["data"]:
    if not exists(path):
        mkdir(path)

# Start program
copyright_text = (f"{sender} v{version}, Copyright (C) 2019 SCP-079 <https://scp-079.org>\n"
                  "Licensed under the terms of the GNU General Public License v3 or later (GPLv3+)\n")

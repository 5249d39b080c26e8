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
from functools import wraps

import click

from .errors import ParabolaError
from .etc import thread, to_json

# Enable logging
logger = logging.getLogger(__name__)


def guarded(func):
    # Domain errors become exit codes, optionally with a JSON error line
    @wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()

        try:
            return func(*args, **kwargs)
        except ParabolaError as e:
            logger.warning(f"Command {ctx.info_name} stopped: {e}")

            if (ctx.obj or {}).get("error_json"):
                click.echo(to_json({"error": e.kind, "message": str(e), "exit_code": e.exit_code}))
            else:
                click.echo(f"Error: {e}", err=True)

            ctx.exit(e.exit_code)

    return wrapper


def threaded(daemon: bool = True):
    """Run the function in a background thread, the call returns at once.

    save_graphs uses daemon=False, a non-daemon thread finishes the write even
    when the command returns first.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            return thread(func, args, kwargs, daemon)
        return wrapper
    return decorator

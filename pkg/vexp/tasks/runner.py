"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

import logging
from typing import List, Optional

from vexp.common.exceptions import VexpError
from vexp.common.flags import flags
from vexp.common.registry import registry
from vexp.common.utils import setup_imports, setup_logging

# Exit code for domain precondition violations
EXIT_USAGE = 2


def log_level(args) -> int:
    if args.debug:
        return logging.DEBUG
    if args.quiet:
        return logging.WARNING
    return logging.INFO


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse `argv`, dispatch to the task registered for the chosen command and
    return its exit code. Domain errors are logged and mapped to exit code 2;
    argparse usage errors exit with 2 as well.
    """
    parser = flags.get_parser()
    args, override_args = parser.parse_known_args(argv)
    if override_args and args.mode != "verify":
        parser.error(f"unrecognized arguments: {' '.join(override_args)}")

    setup_logging(log_level(args))
    setup_imports()

    task_cls = registry.get_task_class(args.mode)
    assert task_cls is not None, f"No task registered for '{args.mode}'"
    task = task_cls(args, override_args)
    try:
        return task.run()
    except (VexpError, ValueError, ArithmeticError, OSError) as e:
        logging.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE

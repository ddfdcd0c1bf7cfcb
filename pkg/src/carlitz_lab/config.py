"""Run-time settings: enumeration cap and brute-force worker count.

Both live in context variables so that a CLI invocation (or a test) can
override them for a block of code without touching global state seen by
other threads.
"""

import contextlib
import contextvars
import os

DEFAULT_CAP = 10 ** 6
CAP_ENV = 'CARLITZ_LAB_CAP'


def _env_cap():
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_CAP


_cap = contextvars.ContextVar('enumeration_cap', default=None)
_workers = contextvars.ContextVar('workers', default=1)


def current_cap() -> int:
    cap = _cap.get()
    return _env_cap() if cap is None else cap


def current_workers() -> int:
    return _workers.get()


@contextlib.contextmanager
def settings(cap=None, workers=None):
    """Temporarily override the enumeration cap and/or worker count."""
    tokens = []
    if cap is not None:
        tokens.append((_cap, _cap.set(int(cap))))
    if workers is not None:
        tokens.append((_workers, _workers.set(max(1, int(workers)))))
    try:
        yield
    finally:
        for var, tok in reversed(tokens):
            var.reset(tok)

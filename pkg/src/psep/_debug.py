from __future__ import annotations

import os
from typing import Optional


def debug_enabled(flag: Optional[bool] = None) -> bool:
    """Explicit flag wins; otherwise ``PSEP_DEBUG_ASSERT=1`` turns checks on."""
    if flag is not None:
        return flag
    return os.environ.get("PSEP_DEBUG_ASSERT", "") == "1"

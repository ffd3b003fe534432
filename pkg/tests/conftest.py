from __future__ import annotations

import pytest

from gwcount import ComplexEvalContext, RealEvalContext


@pytest.fixture(scope="session")
def engines() -> tuple[ComplexEvalContext, RealEvalContext]:
    """One warm engine pair shared by tests that only read pure values."""
    cctx = ComplexEvalContext()
    rctx = RealEvalContext(cctx)
    return cctx, rctx

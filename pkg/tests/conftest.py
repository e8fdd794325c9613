import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CHEBSURD_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="set CHEBSURD_SLOW=1 to run exact 10^9-index evaluations")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

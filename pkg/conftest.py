# Test wiring: configure Django the way `manage.py test` does, so the suite
# runs under plain pytest.
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'server'))
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'settings')

import django  # noqa: E402

django.setup()


@pytest.fixture(scope='session', autouse=True)
def _django_test_databases():
    from django.test.utils import setup_databases, setup_test_environment, teardown_databases, teardown_test_environment
    setup_test_environment()
    old_config = setup_databases(verbosity=0, interactive=False)
    yield
    teardown_databases(old_config, verbosity=0)
    teardown_test_environment()

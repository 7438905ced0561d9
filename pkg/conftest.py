# Collection bridge: the suite under fuchs/ is written for the ward test
# runner (`PYTHONPATH=fuchs ward --path fuchs`). This lets pytest collect the
# same ward tests and run them through ward's own Test.run machinery.

import importlib.util
import sys
from pathlib import Path

import pytest

from ward._collect import get_tests_in_modules
from ward._testing import COLLECTED_TESTS
from ward._fixtures import FixtureCache
from ward.models import Scope
from ward.testing import TestOutcome

FUCHS = Path(__file__).resolve().parent / 'fuchs'
if str(FUCHS) not in sys.path:
    sys.path.insert(0, str(FUCHS))

_cache = FixtureCache()


def pytest_pycollect_makemodule(module_path, parent):
    if module_path.parent.resolve() == FUCHS and module_path.name.startswith('test_'):
        return WardModule.from_parent(parent, path=module_path)
    return None


class WardModule(pytest.File):
    def collect(self):
        name = self.path.stem
        spec = importlib.util.spec_from_file_location(name, str(self.path))
        mod = importlib.util.module_from_spec(spec)
        sys.modules[name] = mod
        spec.loader.exec_module(mod)
        tests = get_tests_in_modules([mod], capture_output=False)
        for t in tests:
            for j, inst in enumerate(t.get_parameterised_instances()):
                label = f'{t.line_number}:{t.description}'
                if t.is_parameterised:
                    label += f'[{j}]'
                yield WardItem.from_parent(self, name=label, ward_test=inst)


class WardItem(pytest.Item):
    def __init__(self, *, ward_test, **kwargs):
        super().__init__(**kwargs)
        self.ward_test = ward_test

    def runtest(self):
        result = self.ward_test.run(_cache)
        _cache.teardown_fixtures_for_scope(Scope.Test, scope_key=self.ward_test.id,
                capture_output=False)
        if result.outcome == TestOutcome.SKIP:
            pytest.skip(result.message or 'skipped by ward')
        if result.outcome in (TestOutcome.FAIL, TestOutcome.XPASS):
            if result.error is not None:
                raise result.error
            pytest.fail(result.message or str(result.outcome))

    def reportinfo(self):
        return self.path, self.ward_test.line_number - 1, self.name


def pytest_sessionfinish(session):
    _cache.teardown_global_fixtures(capture_output=False)

import pytest

from pathlib import Path

from logeval.corpus import extract_instances
from logeval.dynamic_eval import BuildAdapter, build_dynamic_instances
from logeval.static_eval import PredictionRecord

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
STATIC_PROJECTS = ("aurora", "bastion")
DYNAMIC_PROJECTS = ("orchard", "relay")


def oracle_predictions(instances, tool="oracle"):
    """Feed the oracles back as predictions (the identity setup)."""
    return [
        PredictionRecord(
            instance_id=inst.id if hasattr(inst, "id") else inst.instance_id,
            insert_pos=inst.log_pos,
            statements=(inst.oracle_text,),
            tool=tool,
        )
        for inst in instances
    ]


@pytest.fixture(scope="session")
def static_corpus():
    """All instances extracted from the two bundled static fixture projects."""
    instances = []
    for project in STATIC_PROJECTS:
        result = extract_instances(FIXTURES / "static" / project, project=project)
        assert not result.skipped_files, result.skipped_files
        assert not result.skipped_statements, result.skipped_statements
        instances.extend(result.instances)
    return instances


def _dynamic_build(name):
    root = FIXTURES / "dynamic" / name
    adapter = BuildAdapter.load(root / "adapter.json")
    build = build_dynamic_instances(root, adapter)
    assert not build.excluded, build.excluded
    return root, adapter, build.instances


@pytest.fixture(scope="session")
def orchard():
    return _dynamic_build("orchard")


@pytest.fixture(scope="session")
def relay():
    return _dynamic_build("relay")

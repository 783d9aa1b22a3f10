import json
import pathlib

import pytest

jsonschema = pytest.importorskip("jsonschema")
referencing = pytest.importorskip("referencing")

import gl2dist

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "docs" / "schemas"


def registry():
    resources = []
    for path in SCHEMAS.glob("*.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], referencing.Resource.from_contents(schema)))
    return referencing.Registry().with_resources(resources)


def validate(report, name):
    schema = json.loads((SCHEMAS / name).read_text())
    jsonschema.Draft202012Validator(schema, registry=registry()).validate(report)


@pytest.mark.parametrize("spec", ["K=sqrt(p)", "K=sqrt(p);L=sqrt(u)", "K=sqrt(u);L=sqrt(uK)", "K=sqrt(p);L=4rt(p)"])
def test_classify_schema(spec):
    validate(gl2dist.classify(spec), "classify.json")


def test_verdict_and_enumerate_schema():
    validate(gl2dist.decide("K=sqrt(p);L=4rt(p)", "t=1/4;m=1"), "verdict.json")
    validate(gl2dist.enumerate("K=sqrt(p);L=sqrt(u)", max_denominator=2), "enumerate.json")


def test_epsilon_schema():
    validate(gl2dist.epsilon("K=sqrt(p);L=sqrt(u)", "t=0;m=4", pair="L/K''"), "epsilon.json")
    validate(gl2dist.epsilon("K=sqrt(p);L=sqrt(u)", "t=1/4;m=1", pair="K/F", gauss=True), "epsilon.json")


def test_hakim_and_verify_schema():
    validate(gl2dist.hakim("K=sqrt(p);L=sqrt(u)", "t=1/2;m=2"), "hakim.json")
    validate(gl2dist.verify_paper(only=1), "verify.json")

import json

import pytest

from c3kit.registry import (
    MISC, Group, JudgeMethod, RegistryError, UnknownContextError, add_context, builtin_registry,
    get_seeds, load_registry, load_registry_file, lookup,
)


def test_builtin_shape(registry):
    assert len(registry.by_group(Group.STRING)) == 23
    assert len(registry.by_group(Group.NUMBER)) == 6
    assert builtin_registry() is builtin_registry()


def test_every_context_has_examples_and_a_method(registry):
    for ctx in registry.contexts:
        assert ctx.examples
        assert isinstance(ctx.judge_method, JudgeMethod)
        if ctx.group is Group.STRING:
            assert ctx.seeds


@pytest.mark.parametrize("name,method", [
    ("EMAIL", JudgeMethod.LLM_REGEX),
    ("PERSON", JudgeMethod.LLM_NER),
    ("BINARY", JudgeMethod.REGEX),
])
def test_judge_methods(registry, name, method):
    assert lookup(registry, name).judge_method is method


def test_lookup_unknown(registry):
    with pytest.raises(UnknownContextError):
        lookup(registry, "NOPE")


def test_seeds_only_for_strings(registry):
    assert get_seeds(lookup(registry, "EMAIL"))
    with pytest.raises(ValueError):
        get_seeds(lookup(registry, "BINARY"))


def test_generic_contexts_list_siblings(registry):
    time = lookup(registry, "TIME")
    assert time.generic
    assert all(s.category == time.category and s.name != "TIME" for s in registry.siblings(time))


def test_user_context_defaults(mrs_definition, extended_registry):
    role = lookup(extended_registry, "MRS_ROLE")
    assert role.category == "Medical"
    assert role.judge_method is JudgeMethod.LLM_NER
    assert role.seeds == role.examples
    bare = load_registry({"contexts": [{"name": "SKU", "examples": ["AB-1"], "regex": "[A-Z]+-[0-9]+"}]})
    sku = lookup(bare, "SKU")
    assert (sku.category, sku.judge_method) == ("Custom", JudgeMethod.LLM_REGEX)


@pytest.mark.parametrize("definition", [
    {"name": "EMAIL", "examples": ["x"]},  # duplicate
    {"name": MISC, "examples": ["x"]},
    {"name": "lower", "examples": ["x"]},
    {"name": "EMPTY", "examples": []},
    {"name": "BADRE", "examples": ["x"], "regex": "("},
    {"name": "NUM", "group": "NUMBER", "examples": ["1"]},  # REGEX needs a regex
    {"name": "STRX", "examples": ["x"], "judge_method": "REGEX", "regex": "x"},
    {"name": "GEN", "examples": ["x"], "generic": True, "regex": "x"},
])
def test_rejected_definitions(definition):
    with pytest.raises(RegistryError):
        add_context({}, definition)


def test_add_context_does_not_mutate(mrs_definition):
    doc = {"contexts": []}
    merged = add_context(doc, mrs_definition)
    assert doc == {"contexts": []}
    assert merged["contexts"][0]["name"] == "MRS_ROLE"


def test_unknown_top_level_key():
    with pytest.raises(RegistryError, match="unknown top-level"):
        load_registry({"contextz": []})


def test_document_round_trip(extended_registry):
    doc = json.loads(json.dumps(extended_registry.to_document()))
    again = load_registry(doc, builtins=False)
    assert again.names() == extended_registry.names()
    assert lookup(again, "MRS_ROLE") == lookup(extended_registry, "MRS_ROLE")


def test_registry_file_errors(tmp_path):
    with pytest.raises(RegistryError, match="not found"):
        load_registry_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(RegistryError, match="invalid JSON"):
        load_registry_file(bad)
    assert load_registry_file(None) is builtin_registry()


def test_fixed_length_setting():
    reg = load_registry({"settings": {"fixed_length_width": 2}})
    assert reg.fixed_length_width == 2
    with pytest.raises(RegistryError):
        load_registry({"settings": {"fixed_length_width": 0}})

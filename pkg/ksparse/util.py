"""Module for utility functions shared by several ksparse subpackages."""
import json
import os
import tempfile
from os import path
from pathlib import Path

import jsonschema

RESOURCES_DIRECTORY = path.join(Path(__file__).resolve().parents[1], "resources")
SCHEMAS_DIRECTORY = path.join(RESOURCES_DIRECTORY, "schemas")
DEFAULT_CONFIG_FILEPATH = path.join(RESOURCES_DIRECTORY, "default_config.json")

_SCHEMA_CACHE = {}


def load_schema(name):
    """Load one of the JSON schemas distributed in resources/schemas.

    Args:
        name (str): Schema name without suffix, ie. "solve_report".
    Returns:
        schema: the parsed schema dictionary
    """
    if name not in _SCHEMA_CACHE:
        filepath = path.join(SCHEMAS_DIRECTORY, "{0}.schema.json".format(name))
        if not path.exists(filepath):
            raise FileNotFoundError(
                "The expected location of the schema file cannot be found: {0}".format(filepath)
            )
        with open(filepath) as f:
            _SCHEMA_CACHE[name] = json.load(f)
    return _SCHEMA_CACHE[name]


def validate_json(data, schema_name):
    """Validate a JSON-compatible object against a named schema.
    Raises jsonschema.ValidationError on failure.
    """
    jsonschema.validate(instance=data, schema=load_schema(schema_name))


def load_default_config():
    with open(DEFAULT_CONFIG_FILEPATH) as f:
        return json.load(f)


def dumps(data):
    """Serialize to JSON deterministically: sorted keys, repr-exact floats, fixed indentation."""
    return json.dumps(data, sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_atomic(filepath, text):
    """Write text to filepath through a temporary sibling so that a failure leaves no partial file."""
    directory = path.dirname(path.abspath(filepath))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".ksparse-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, filepath)
    except BaseException:
        if path.exists(tmp):
            os.remove(tmp)
        raise


def format_float(value):
    """Shortest repr that round-trips a 64-bit float exactly."""
    return repr(float(value))

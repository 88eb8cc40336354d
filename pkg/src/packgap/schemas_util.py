"""Access to the JSON schemas shipped with the package."""
import json
from importlib import resources


def load_schema(name: str) -> dict:
    return json.loads(resources.files("packgap").joinpath("schemas", f"{name}.json").read_text())

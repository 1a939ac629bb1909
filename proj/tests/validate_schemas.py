"""Run every --json command of the CLI and validate its output against the
shipped schemas. Usage: validate_schemas.py <kgonal binary> <schemas dir> <data dir>"""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        schemas[path.name] = json.loads(path.read_text())
    registry = Registry().with_resources(
        (name, Resource.from_contents(s)) for name, s in schemas.items()
    )
    return schemas, registry


def main():
    binary, schema_dir, data_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    schemas, registry = load_registry(schema_dir)
    for s in schemas.values():
        Draft202012Validator.check_schema(s)

    def validate(name, doc, what):
        errors = list(Draft202012Validator(schemas[name], registry=registry).iter_errors(doc))
        for e in errors:
            print(f"FAIL {what}: {e.message} at {list(e.absolute_path)}")
        if not errors:
            print(f"ok   {what}")
        return not errors

    def cli(*args):
        out = subprocess.run([binary, *args], capture_output=True, text=True)
        if out.returncode != 0:
            raise SystemExit(f"command failed ({out.returncode}): {args}\n{out.stderr}")
        return json.loads(out.stdout)

    inst = ["--g", "6", "--r", "1", "--d", "4", "--k", "3"]
    ok = True
    with tempfile.TemporaryDirectory() as tmp:
        report = pathlib.Path(tmp) / "report.json"
        cases = [
            ("splitting_report.schema.json", ["splitting", *inst, "--json"]),
            ("splitting_report.schema.json", ["splitting", "--g", "11", "--r", "2", "--d", "8", "--k", "5", "--json"]),
            ("tableau_report.schema.json", ["tableau", "-i", str(data_dir / "scrollar_k5.txt"), "--k", "5", "--json", "--transform", "rotate"]),
            ("tableau_report.schema.json", ["tableau", "-i", str(data_dir / "scrollar_k5.txt"), "--k", "5", "--alpha", "3", "--json"]),
            ("scrollarize_report.schema.json", ["scrollarize", "-i", str(data_dir / "hook_k5.json"), "--k", "5", "--json"]),
            ("scrollarize_report.schema.json", ["scrollarize", "-i", str(data_dir / "k3_type2.txt"), "--k", "3", "--json"]),
            ("enumerate_report.schema.json", ["enumerate", *inst, "--json"]),
            ("enumerate_report.schema.json", ["enumerate", *inst, "--json", "--tori"]),
            ("verification_report.schema.json", ["verify", *inst, "--json", "--report", str(report)]),
            ("verification_report.schema.json", ["verify", "-m", str(data_dir / "trigonal.toml"), "--json"]),
        ]
        for name, args in cases:
            ok &= validate(name, cli(*args), " ".join(args[:1] + args[1:4]))
        ok &= validate("verification_report.schema.json", json.loads(report.read_text()), "report file")
        limited = subprocess.run([binary, "verify", *inst, "--max-tableaux", "1", "--json"], capture_output=True, text=True)
        ok &= limited.returncode == 2
        ok &= validate("verification_report.schema.json", json.loads(limited.stdout), "limited verify")

    for path in sorted(data_dir.glob("*.json")):
        ok &= validate("tableau.schema.json", json.loads(path.read_text()), path.name)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

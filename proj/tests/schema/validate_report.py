"""Runs `co-quartic suite` and validates the report against the schema.

usage: validate_report.py <co-quartic> <schema> [fixture ...]
"""
import json
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    binary, schema_path, *fixtures = sys.argv[1:]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft7Validator.check_schema(schema)

    with tempfile.NamedTemporaryFile(suffix=".json") as out:
        run = subprocess.run([binary, "suite", "--seed", "1", "--samples", "10", "--og-seeds", "1", "--out", out.name],
                             capture_output=True, text=True)
        report = json.load(open(out.name))
    jsonschema.validate(report, schema)
    if run.returncode != report["exit_status"]:
        print(f"exit code {run.returncode} != reported {report['exit_status']}")
        return 1

    for path in fixtures:
        with open(path) as f:
            jsonschema.validate(json.load(f), schema)
    print("report and fixtures validate")
    return 0


if __name__ == "__main__":
    sys.exit(main())

# services/rendering/report_formatter.py
import json

import pandas as pd


def report_to_json(report, indent=2):
    """Canonical JSON text: sorted keys, every rational already a "p/q" string."""
    return json.dumps(report, sort_keys=True, indent=indent, ensure_ascii=False)


def report_to_json_line(report):
    return json.dumps(report, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def parse_report(text):
    return json.loads(text)


def _cone_rows(role, cone_payload):
    if cone_payload is None:
        return []
    return [{"cone": role, "kind": "generator", "index": i, "coords": "(" + ", ".join(g) + ")"}
            for i, g in enumerate(cone_payload["generators"])] + \
           [{"cone": role, "kind": "facet", "index": i, "coords": "(" + ", ".join(f) + ")"}
            for i, f in enumerate(cone_payload["facets"])]


def cones_dataframe(report):
    rows = []
    for role in ("exact", "lower", "upper"):
        rows.extend(_cone_rows(role, report.get(role)))
    return pd.DataFrame(rows, columns=["cone", "kind", "index", "coords"])


def verdict_dataframe(verdict_payload):
    certificate = verdict_payload.get("certificate") or {}
    rows = [{"field": "verdict", "value": verdict_payload["verdict"]}]
    if certificate:
        rows.append({"field": "certificate", "value": certificate["kind"]})
        rows.append({"field": "source", "value": certificate["source"]})
        for key in sorted(certificate.get("details", {})):
            rows.append({"field": key, "value": json.dumps(certificate["details"][key], sort_keys=True, ensure_ascii=False)})
    return pd.DataFrame(rows, columns=["field", "value"])


def report_to_table(report):
    """Human-readable table of a cone report."""
    params = report["params"]
    lines = [f"g={params['g']} d={params['d']} n={params.get('n')}  frame: {', '.join(report['coordinates'])}"]
    if report.get("theorem"):
        lines.append(f"theorem: {report['theorem']}")
    if report.get("flags"):
        lines.append(f"flags: {', '.join(report['flags'])}")
    frame = cones_dataframe(report)
    if not frame.empty:
        lines.append(frame.to_string(index=False))
    for cert in report.get("boundary", []):
        lines.append(f"boundary: {cert['class']['coords']} . {cert['curve']['label']} = {cert['pairing']}  ({cert['source']})")
    return "\n".join(lines) + "\n"

"""Report envelopes and the plain-text renderer."""
from __future__ import annotations


def envelope(command: str, inputs: dict, result: dict) -> dict:
    return {"command": command, "inputs": inputs, "result": result}


def _scalar(x):
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x):
        return "[" + ", ".join(str(_scalar(y)) for y in x) + "]"
    return str(x)


def _tree(obj, indent=0, out=None, depth=3):
    out = [] if out is None else out
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and not (isinstance(v, list) and
                                                   all(not isinstance(y, (dict, list)) for y in v)):
                if depth == 0:
                    out.append(f"{pad}{k}: ...")
                    continue
                out.append(f"{pad}{k}:")
                _tree(v, indent + 1, out, depth - 1)
            else:
                out.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            if isinstance(v, list) and all(not isinstance(y, (dict, list)) for y in v):
                out.append(f"{pad}- {_scalar(v)}")
            elif isinstance(v, (dict, list)):
                out.append(f"{pad}- [{i}]")
                _tree(v, indent + 1, out, depth - 1)
            else:
                out.append(f"{pad}- {_scalar(v)}")
    else:
        out.append(pad + _scalar(obj))
    return out


def _analyze_text(r):
    lines = [f"critical values: {_scalar(r['critical_values'])} (r = {r['criticality']}, "
             f"bandwidth {r['bandwidth']})",
             f"fixed components: {len(r['components'])} "
             f"(sink {r['sink']}, source {r['source']})"]
    for c in r["components"]:
        lines.append(f"  {c['kind']:6s} weight {c['weight']} dim {c['dim']}")
    lines += [f"equalized at sink/source: {_scalar(r['equalized_at_sink'])}/"
              f"{_scalar(r['equalized_at_source'])}",
              f"B-type: {_scalar(r['b_type'])}",
              f"admissible quotients: {_scalar(r['admissible'])}",
              f"bordism: {_scalar(r['bordism'])} (cells {_scalar(r['bordism_via_cells'])}, "
              f"admissible {_scalar(r['bordism_via_admissible'])})",
              f"Q-factorial: {_scalar(r['q_factorial'])}"]
    return lines


def _verify_text(r):
    lines = []
    for fx in r["results"]:
        mark = "" if fx["as_expected"] else "  <-- unexpected"
        lines.append(f"{fx['fixture']} ({fx['kind']}){mark}")
        for s in fx["suites"]:
            note = ""
            if s["status"] == "skipped":
                note = f" ({s.get('reason', '')})"
            elif s["status"] == "fail" and "runs" in s and s["suite"] == "pruning-theorem":
                note = " (failed steps " + ", ".join(
                    str(x) for run in s["runs"] for x in run["failed_steps"]) + ")"
            elif "error" in s:
                note = f" ({s['error']})"
            lines.append(f"  {s['suite']:22s} {s['status']}{note}")
    sm = r["summary"]
    lines.append(f"pass {sm['pass']}, fail {sm['fail']}, skipped {sm['skipped']}; "
                 f"unexpected: {', '.join(sm['unexpected']) or 'none'}")
    return lines


def render_text(report: dict) -> str:
    cmd = report["command"]
    r = report["result"]
    head = [f"{cmd}: " + ", ".join(f"{k}={_scalar(v)}" for k, v in report["inputs"].items())]
    if cmd == "analyze":
        body = _analyze_text(r)
    elif cmd == "quotients":
        body = [r["rendered"]] + _tree({"walls": [{k: w[k] for k in ("index", "level", "tag")}
                                                  for w in r["chain"]["walls"]]})
    elif cmd == "verify":
        body = _verify_text(r)
    else:
        body = _tree(r)
    return "\n".join(head + body) + "\n"

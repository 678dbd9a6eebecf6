"""Command-line surface: diagnose, consult, validate, serve, report, errata.

Exit codes: 0 success, 1 validation findings, 2 usage/input/system error.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import NoReturn

import click

from .core import EvidenceError
from .engine import Diagnosis, diagnose, rank_report
from .errata import audit, render_markdown
from .kb import KnowledgeBase, KnowledgeBaseError, default_kb, parse_kb, validate_kb
from .serialize import render_table, render_tsv, response_payload, set_key, to_json
from .service import default_ui_dir, make_server


def _fail(message: str) -> NoReturn:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _load_kb(path: str | None) -> KnowledgeBase:
    if path is None:
        return default_kb()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as err:
        _fail(str(err))
    return parse_kb(text)


def _symptom_list(symptom: tuple[str, ...], symptoms: str | None) -> list[str]:
    names = list(symptom)
    if symptoms:
        names.extend(part.strip() for part in symptoms.split(",") if part.strip())
    return names


@click.group()
def main() -> None:
    """Evidential diagnosis over a symptom knowledge base."""


@main.command("diagnose")
@click.option("--kb", "kb_path", type=str, default=None, help="KB file (default: built-in)")
@click.option("--condition", required=True, help="condition name from the KB")
@click.option("--symptom", multiple=True, help="symptom name (repeatable)")
@click.option("--symptoms", default=None, help="comma-separated symptom names")
@click.option("--trace", is_flag=True, help="show every combination step")
@click.option(
    "--format", "fmt", type=click.Choice(["table", "tsv", "json"]), default="table"
)
@click.option("--plot", "plot_path", type=str, default=None, help="write a ranking chart PNG")
def cmd_diagnose(kb_path, condition, symptom, symptoms, trace, fmt, plot_path) -> None:
    """Run one batch consultation and print the report."""
    try:
        kb = _load_kb(kb_path)
        d = diagnose(kb, condition, _symptom_list(symptom, symptoms))
    except EvidenceError as err:
        _fail(str(err))
    if fmt == "table":
        click.echo(render_table(d, trace), nl=False)
    elif fmt == "tsv":
        click.echo(render_tsv(d, trace), nl=False)
    else:
        click.echo(to_json(response_payload(d, trace)), nl=False)
    if plot_path is not None:
        from .plot import save_diagnosis_figure

        save_diagnosis_figure(d, plot_path)
        click.echo(f"wrote {plot_path}", err=True)


def _consult_ranking(d: Diagnosis) -> str:
    lines = [f"  K = {d.steps[-1].conflict:.4f}"]
    for row in rank_report(d):
        lines.append(f"  {row.label:<4} {row.mass:.2f}  [{row.bel:.2f}, {row.pl:.2f}]")
    return "\n".join(lines)


@main.command("consult")
@click.option("--kb", "kb_path", type=str, default=None, help="KB file (default: built-in)")
@click.option("--condition", required=True, help="condition name from the KB")
def cmd_consult(kb_path, condition) -> None:
    """Interactive session: one symptom per line; 'undo' retracts, 'done' ends."""
    try:
        kb = _load_kb(kb_path)
        kb.condition_index(condition)
    except EvidenceError as err:
        _fail(str(err))
    known = set(kb.symptom_names())
    click.echo("enter one symptom per line ('undo' retracts, 'done' ends):")
    selected: list[str] = []
    for raw in sys.stdin:
        name = raw.strip()
        if not name:
            continue
        if name == "done":
            break
        if name == "undo":
            if not selected:
                click.echo("warning: nothing to undo", err=True)
            else:
                dropped = selected.pop()
                click.echo(f"retracted {dropped}", err=True)
            continue
        if name in selected:
            click.echo(f"warning: duplicate symptom: {name} (state unchanged)", err=True)
            continue
        if name not in known:
            click.echo(f"warning: unknown symptom: {name} (state unchanged)", err=True)
            continue
        selected.append(name)
        d = diagnose(kb, condition, selected)
        click.echo(f"after {name}:")
        click.echo(_consult_ranking(d))
    if not selected:
        _fail("no symptoms selected")
    final = diagnose(kb, condition, selected)
    click.echo("")
    click.echo(render_table(final, trace=False), nl=False)


@main.command("validate")
@click.option("--kb", "kb_path", type=str, required=True, help="KB file to check")
def cmd_validate(kb_path) -> None:
    """Parse and validate a KB file; findings list one violation per line."""
    try:
        text = Path(kb_path).read_text(encoding="utf-8")
    except OSError as err:
        _fail(str(err))
    try:
        kb = parse_kb(text)
    except KnowledgeBaseError as err:
        for issue in err.issues:
            click.echo(str(issue))
        sys.exit(1)
    issues = validate_kb(kb)
    if issues:
        for issue in issues:
            click.echo(str(issue))
        sys.exit(1)
    click.echo(
        f"ok: {len(kb.symptoms)} symptoms, {len(kb.conditions)} conditions, "
        f"{len(kb.frame)} diseases"
    )


@main.command("serve")
@click.option("--kb", "kb_path", type=str, default=None, help="KB file (default: built-in)")
@click.option("--addr", default="127.0.0.1:8080", help="host:port to bind")
@click.option("--ui", "ui_path", type=str, default=None, help="static UI bundle directory")
def cmd_serve(kb_path, addr, ui_path) -> None:
    """Serve the HTTP API and the consultation UI."""
    try:
        kb = _load_kb(kb_path)
    except EvidenceError as err:
        _fail(str(err))
    host, sep, port_text = addr.rpartition(":")
    if not sep or not port_text.isdigit():
        _fail(f"bad --addr (want host:port): {addr}")
    ui_dir = Path(ui_path) if ui_path is not None else default_ui_dir()
    try:
        server = make_server(kb, host, int(port_text), ui_dir)
    except OSError as err:
        _fail(f"cannot bind {addr}: {err}")
    bound_host, bound_port = server.server_address[:2]
    click.echo(f"serving on http://{bound_host}:{bound_port}")
    if ui_dir is not None:
        click.echo(f"ui bundle: {ui_dir}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()


@main.command("report")
@click.option("--kb", "kb_path", type=str, default=None, help="KB file (default: built-in)")
@click.option("--condition", "conditions", multiple=True, help="condition (default: all)")
@click.option("--symptoms", default=None, help="comma-separated symptoms (default: all)")
@click.option("--out", "out_dir", type=str, required=True, help="output directory")
def cmd_report(kb_path, conditions, symptoms, out_dir) -> None:
    """Batch report: delimited step/summary tables plus ranking charts."""
    from .plot import save_conditions_figure, save_diagnosis_figure

    try:
        kb = _load_kb(kb_path)
        names = list(conditions) if conditions else list(kb.conditions)
        selected = (
            [part.strip() for part in symptoms.split(",") if part.strip()]
            if symptoms
            else list(kb.symptom_names())
        )
        diagnoses = [diagnose(kb, name, selected) for name in names]
    except EvidenceError as err:
        _fail(str(err))
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as err:
        _fail(str(err))

    summary = out / "summary.tsv"
    with summary.open("w", encoding="utf-8") as fh:
        fh.write("condition\tdisease\tmass\tbel\tpl\n")
        for d in diagnoses:
            for row in rank_report(d):
                fh.write(f"{d.condition}\t{row.label}\t{row.mass!r}\t{row.bel!r}\t{row.pl!r}\n")
    click.echo(f"wrote {summary}")

    steps = out / "steps.tsv"
    with steps.open("w", encoding="utf-8") as fh:
        fh.write("condition\tstep\tsymptom\tconflict\tset\tmass\n")
        for d in diagnoses:
            frame = d.final.frame
            for i, step in enumerate(d.steps, start=1):
                for fs, value in step.combined.items():
                    fh.write(
                        f"{d.condition}\t{i}\t{step.symptom}\t{step.conflict!r}"
                        f"\t{set_key(frame, fs)}\t{value!r}\n"
                    )
    click.echo(f"wrote {steps}")

    for d in diagnoses:
        figure = save_diagnosis_figure(d, out / f"condition_{d.condition}.png")
        click.echo(f"wrote {figure}")
    combined = save_conditions_figure(diagnoses, out / "final_result.png")
    click.echo(f"wrote {combined}")


@main.command("errata")
@click.option("--out", "out_path", type=str, default=None, help="write here instead of stdout")
def cmd_errata(out_path) -> None:
    """Regenerate the printed-chain audit document."""
    text = render_markdown(audit())
    if out_path is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out_path).write_text(text, encoding="utf-8")
    except OSError as err:
        _fail(str(err))
    click.echo(f"wrote {out_path}")


if __name__ == "__main__":
    main()

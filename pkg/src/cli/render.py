"""
Salida de la CLI: JSON determinista o tablas alineadas con rich.
"""

import json
from typing import Any, Dict, List, Mapping

from rich.console import Console
from rich.table import Table


def to_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, default=str)


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, default=str)
    return str(value)


def mapping_table(title: str, payload: Mapping[str, Any]) -> Table:
    table = Table(title=title, show_lines=False)
    table.add_column("field", style="cyan")
    table.add_column("value")
    for key in sorted(payload):
        table.add_row(key, _cell(payload[key]))
    return table


def series_table(title: str, terms: List[List[Any]], display: List[str]) -> Table:
    """Una fila por término: exponentes y coeficiente en forma legible."""
    table = Table(title=title)
    table.add_column("exponent", style="cyan", justify="right")
    table.add_column("coefficient")
    for (exps, _), text in zip(terms, display):
        table.add_row(",".join(str(e) for e in exps), text)
    return table


def suites_table(reports: List[Dict[str, Any]]) -> Table:
    table = Table(title="verification")
    table.add_column("suite", style="cyan")
    table.add_column("status")
    table.add_column("checks", justify="right")
    table.add_column("failed", justify="right")
    table.add_column("seconds", justify="right")
    for r in reports:
        status = "[green]pass[/green]" if r["passed"] else "[red]FAIL[/red]"
        table.add_row(r["suite"], status, str(r["total"]), str(r["failed"]), f"{r['elapsed']:.2f}")
    return table


def failures_table(reports: List[Dict[str, Any]]) -> Table:
    table = Table(title="failed checks")
    table.add_column("suite", style="cyan")
    table.add_column("check")
    table.add_column("detail")
    for r in reports:
        for c in r["checks"]:
            if not c["passed"]:
                table.add_row(r["suite"], c["name"], c["detail"])
    return table


def emit(console: Console, fmt: str, title: str, payload: Dict[str, Any]) -> None:
    """
    Escribe un resultado en el formato pedido.

    Args:
        console: Consola de rich (stdout)
        fmt: "json" o "table"
        title: Título de la tabla
        payload: Resultado ya codificado
    """
    if fmt == "json":
        console.print(to_json(payload), markup=False, highlight=False, emoji=False, soft_wrap=True)
        return

    if "suites" in payload:
        console.print(suites_table(payload["suites"]))
        if not payload["passed"]:
            console.print(failures_table(payload["suites"]))
        return
    if "series" in payload and "display" in payload:
        console.print(series_table(title, payload["series"]["terms"], payload["display"]))
        return
    console.print(mapping_table(title, payload))

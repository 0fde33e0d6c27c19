"""Command-line front end; a thin client of the HTTP service.

Every command builds a request, sends it to the service (an in-process
instance by default, or a remote one via --url), and renders the JSON
response.  Exit codes: 0 success / all checks pass; 1 a pass/fail check
failed or the hunt serialized a potential counterexample; 2 invalid input;
3 resource cap exceeded.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_CAP = 3


class ServiceClient:
    """Sends requests either to an in-process app or to a remote server."""

    def __init__(self, url: str | None, as_json: bool):
        self.url = url
        self.as_json = as_json
        self._client = None

    @property
    def client(self) -> httpx.Client:
        if self._client is None:
            if self.url:
                self._client = httpx.Client(base_url=self.url, timeout=3600.0)
            else:
                import warnings
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore", DeprecationWarning)
                    from fastapi.testclient import TestClient
                from .service import app
                self._client = TestClient(app)
        return self._client

    def call(self, method: str, path: str, body: dict | None = None) -> dict:
        try:
            resp = self.client.request(method, path, json=body)
        except httpx.HTTPError as err:
            click.echo(f"error: cannot reach service: {err}", err=True)
            sys.exit(EXIT_INVALID_INPUT)
        if resp.status_code >= 400:
            detail = {}
            try:
                detail = resp.json().get("detail", {})
            except Exception:
                pass
            code = detail.get("code", "invalid_input") if isinstance(detail, dict) else "invalid_input"
            message = detail.get("message", resp.text) if isinstance(detail, dict) else str(detail)
            click.echo(f"error [{code}]: {message}", err=True)
            sys.exit(EXIT_RESOURCE_CAP if code == "resource_cap" else EXIT_INVALID_INPUT)
        return resp.json()

    def emit(self, data: dict) -> None:
        if self.as_json:
            click.echo(json.dumps(data, sort_keys=True, indent=2))


def _read_json_file(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        click.echo(f"error: no such file: {path}", err=True)
        sys.exit(EXIT_INVALID_INPUT)
    except json.JSONDecodeError as err:
        click.echo(f"error: {path} is not valid JSON: {err}", err=True)
        sys.exit(EXIT_INVALID_INPUT)


def _module_selector(module: str):
    if module in ("trivial", "adjoint"):
        return module
    return _read_json_file(module)


def _print_betti(svc: ServiceClient, data: dict) -> None:
    svc.emit(data)
    if svc.as_json:
        return
    table = data["table"]
    kind = data["orientation"]
    click.echo(f"{kind} of {data['name']} with {data['module']} coefficients")
    for p, dim, b in zip(table["degrees"], table["space_dims"], table["betti"]):
        note = "  (bound: missing outgoing differential)" \
            if table.get("inexact_top") == p else ""
        click.echo(f"  degree {p}: betti {b}   [space dim {dim}]{note}")
    euler_space = sum((-1) ** p * d for p, d in zip(table["degrees"], table["space_dims"]))
    euler_betti = sum((-1) ** p * b for p, b in zip(table["degrees"], table["betti"]))
    click.echo(f"  euler characteristic: spaces {euler_space}, betti {euler_betti}")


@click.group()
@click.option("--json", "as_json", is_flag=True, help="emit machine-readable JSON")
@click.option("--url", default=None, envvar="LIECOH_URL",
              help="base URL of a running service (default: run in-process)")
@click.pass_context
def main(ctx, as_json: bool, url: str | None):
    """Exact (co)homology of finite-dimensional Lie algebras."""
    ctx.obj = ServiceClient(url, as_json)


@main.command()
@click.argument("file", type=str)
@click.pass_obj
def validate(svc: ServiceClient, file: str):
    """Check that FILE defines a Lie algebra (Jacobi identity)."""
    data = svc.call("POST", "/algebra/validate", {"algebra": _read_json_file(file)})
    svc.emit(data)
    if not svc.as_json:
        if data["ok"]:
            click.echo(f"{data['name']}: ok")
        else:
            click.echo(f"{data['name']}: Jacobi identity violated")
            for v in data["violations"]:
                click.echo(f"  triple {tuple(v['triple'])}: residual {v['residual']}")
    if not data["ok"]:
        sys.exit(EXIT_INVALID_INPUT)


@main.command()
@click.argument("file", type=str)
@click.pass_obj
def report(svc: ServiceClient, file: str):
    """Structural flags and dimensions of the algebra in FILE."""
    data = svc.call("POST", "/algebra/report", {"algebra": _read_json_file(file)})
    svc.emit(data)
    if not svc.as_json:
        click.echo(f"report for {data['name']}")
        for key, val in data["report"].items():
            click.echo(f"  {key}: {val}")


@main.command()
@click.argument("file", type=str)
@click.option("--module", default="trivial", show_default=True,
              help="trivial | adjoint | path to a module file")
@click.option("--homology", is_flag=True, help="compute homology instead")
@click.pass_obj
def cohomology(svc: ServiceClient, file: str, module: str, homology: bool):
    """Chevalley-Eilenberg (co)homology Betti numbers."""
    body = {"algebra": _read_json_file(file),
            "module": _module_selector(module), "homology": homology}
    _print_betti(svc, svc.call("POST", "/cohomology", body))


@main.command()
@click.argument("file", type=str)
@click.option("--module", default="trivial", show_default=True,
              help="trivial | adjoint | path to a module file")
@click.option("--max-degree", default=4, show_default=True)
@click.option("--cap", default=2_000_000, show_default=True,
              help="maximum entries per differential")
@click.option("--homology", is_flag=True, help="compute homology instead")
@click.pass_obj
def leibniz(svc: ServiceClient, file: str, module: str, max_degree: int,
            cap: int, homology: bool):
    """Leibniz (co)homology up to a degree cap."""
    body = {"algebra": _read_json_file(file), "module": _module_selector(module),
            "max_degree": max_degree, "resource_cap": cap, "homology": homology}
    _print_betti(svc, svc.call("POST", "/leibniz", body))


@main.command()
@click.argument("ids", type=str)
@click.argument("file", type=str)
@click.option("--pmax", default=4, show_default=True,
              help="Leibniz degree bound used by the bounded checks")
@click.option("--cap", default=2_000_000, show_default=True)
@click.option("--flag", "flags", multiple=True,
              help="metadata flag (e.g. prop3.8-hypothesis-holds); repeatable")
@click.pass_obj
def check(svc: ServiceClient, ids: str, file: str, pmax: int, cap: int, flags):
    """Run checks by id (comma-separated, or 'all') on the algebra in FILE."""
    id_list = "all" if ids == "all" else [t.strip() for t in ids.split(",") if t.strip()]
    body = {"algebra": _read_json_file(file), "ids": id_list, "pmax": pmax,
            "resource_cap": cap, "metadata_flags": list(flags)}
    data = svc.call("POST", "/checks/run", body)
    svc.emit(data)
    if not svc.as_json:
        for r in data["results"]:
            mark = {"pass": "PASS", "fail": "FAIL", "informational": "INFO"}[r["verdict"]]
            flag = "  [flagged]" if r.get("flagged") else ""
            click.echo(f"{mark:5s} {r['check_id']:10s} lhs={r['lhs_dims']} rhs={r['rhs_dims']}{flag}")
            click.echo(f"      {r['detail']}")
    if not data["all_passed"]:
        sys.exit(EXIT_CHECK_FAILED)


@main.group()
def catalog():
    """Built-in example algebras."""


@catalog.command("list")
@click.pass_obj
def catalog_list(svc: ServiceClient):
    data = svc.call("GET", "/catalog")
    svc.emit(data)
    if not svc.as_json:
        for name in data["names"]:
            click.echo(name)


@catalog.command("show")
@click.argument("name", type=str)
@click.pass_obj
def catalog_show(svc: ServiceClient, name: str):
    data = svc.call("GET", f"/catalog/{name}")
    svc.emit(data)
    if not svc.as_json:
        click.echo(f"{data['name']}: {data['description']}")
        click.echo(f"  flags: {', '.join(data['flags']) or '-'}")
        for key, val in data["report"].items():
            click.echo(f"  {key}: {val}")


@catalog.command("export")
@click.argument("name", type=str)
@click.pass_obj
def catalog_export(svc: ServiceClient, name: str):
    """Print the algebra file for a catalog entry (reparses losslessly)."""
    data = svc.call("GET", f"/catalog/{name}")
    click.echo(json.dumps(data["algebra"], sort_keys=True, indent=2))


@main.command()
@click.option("--family", required=True, help="random-solvable | random-semidirect")
@click.option("--count", default=50, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--check", "checks", default="prop2.5,thm4.1", show_default=True,
              help="comma-separated check ids, or 'all'")
@click.option("--pmax", default=3, show_default=True)
@click.option("--cap", default=2_000_000, show_default=True)
@click.pass_obj
def hunt(svc: ServiceClient, family: str, count: int, seed: int, checks: str,
         pmax: int, cap: int):
    """Sweep seeded random algebras with checks; serialize every failure."""
    id_list = "all" if checks == "all" else [t.strip() for t in checks.split(",") if t.strip()]
    body = {"family": family, "count": count, "seed": seed, "checks": id_list,
            "pmax": pmax, "resource_cap": cap}
    data = svc.call("POST", "/hunt", body)
    svc.emit(data)
    if not svc.as_json:
        click.echo(f"hunt family={data['family']} seed={data['seed']} count={data['count']}")
        click.echo(f"failures: {len(data['failures'])}")
        for f in data["failures"]:
            r = f["result"]
            click.echo(f"  {r['check_id']} on {r['algebra_id']}: {r['detail']}")
            click.echo(f"    algebra: {json.dumps(f['algebra'], sort_keys=True)}")
    if data["failures"]:
        sys.exit(EXIT_CHECK_FAILED)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int):
    """Run the HTTP service."""
    import uvicorn
    from .service import app
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()

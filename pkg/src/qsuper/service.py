"""HTTP facade over the kernel.

Every operation of the command line is a POST endpoint under /v1 that
accepts a small JSON body and returns a versioned payload.  The handlers
hold no state of their own; determinism and exactness come from the
underlying modules.  Requests with bad input fail with status 400 and a
one-line explanation, and a corrupted on-disk cache surfaces as status
500 rather than silently recomputing wrong answers.
"""

from typing import List, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .acceptance import run_suite
from .algebra import AlgebraElement
from .cache import CacheCorruption
from .center import casimir, is_central, quasi_r_matrix, z_element
from .expr import parse_expression, render_element
from .harish import hc_project, wsup_membership
from .modules import (
    characters, simple_quotient, vector_module, verma_module,
)
from .pairing import get_context, rosso_form
from .rootdata import build_root_datum
from .scalars import ONE, render_scalar, scalar_to_json

SCHEMA_VERSION = 1


def _single(datum, mono):
    return AlgebraElement(datum, {mono: ONE})


def parse_weight_vec(datum, text):
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) != datum.rank:
        raise ValueError(
            "the weight for %s needs %d comma-separated integers"
            % (datum.descriptor, datum.rank))
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError("weight entries must be integers: %r" % text)


def resolve_module(datum, name, depth=None):
    """Build the named module: vector, verma:<weight> or simple:<weight>."""
    if name == "vector":
        return vector_module(datum)
    kind, sep, spec = str(name).partition(":")
    if sep:
        lam = datum.weight_from_vec(parse_weight_vec(datum, spec))
        if kind == "verma":
            return verma_module(datum, lam, depth=6 if depth is None else depth)
        if kind == "simple":
            return simple_quotient(datum, lam, depth=8 if depth is None else depth)
    raise ValueError(
        "unknown module %r; use vector, verma:<weight> or simple:<weight>" % name)


class DatumRequest(BaseModel):
    type: str


class ExprRequest(BaseModel):
    type: str
    expr: str


class PairRequest(BaseModel):
    type: str
    left: str
    right: str


class WeightRequest(BaseModel):
    type: str
    weight: str


class ThetaRequest(BaseModel):
    type: str
    cutoff: int


class ModuleRequest(BaseModel):
    type: str
    module: str
    depth: Optional[int] = None


class CasimirRequest(ModuleRequest):
    k: int = 1


class WsupRequest(ExprRequest):
    mode: str = "both"


class VerifyRequest(BaseModel):
    type: Optional[str] = None


class DatumResponse(BaseModel):
    schema_version: int
    type: str
    rank: int
    parity: List[int]
    cartan: List[List[str]]
    simple_roots: List[str]
    positive_even: List[str]
    positive_odd: List[str]


class ElementResponse(BaseModel):
    schema_version: int
    text: str
    terms: int


class PairResponse(BaseModel):
    schema_version: int
    value: str
    value_json: list
    cache_warnings: List[str]


class WordCombo(BaseModel):
    words: List[List[int]]
    coefficients: List[list]
    text: str


class DualBasisResponse(BaseModel):
    schema_version: int
    weight: List[int]
    rank: int
    lower: List[WordCombo]
    upper: List[WordCombo]
    cache_warnings: List[str]


class ThetaTerm(BaseModel):
    lower: str
    upper: str
    coefficient: str


class ThetaResponse(BaseModel):
    schema_version: int
    cutoff: int
    terms: List[ThetaTerm]


class InvariantTerm(BaseModel):
    kexp: List[int]
    coefficient: list


class HcResponse(BaseModel):
    schema_version: int
    text: str
    invariant: List[InvariantTerm]


class CentralResponse(BaseModel):
    schema_version: int
    central: bool


class WsupResponse(BaseModel):
    schema_version: int
    ok: bool
    mode: str
    reasons: List[str]


class WeightLine(BaseModel):
    weight: str
    vec: List[str]
    dim: int
    sdim: int


class CharacterResponse(BaseModel):
    schema_version: int
    module: str
    status: str
    dim: int
    weights: List[WeightLine]


class CheckRow(BaseModel):
    id: int
    title: str
    ok: bool
    detail: str


class VerifyResponse(BaseModel):
    schema_version: int
    scope: str
    ok: bool
    rows: List[CheckRow]


def _word_combo(datum, combo, letter):
    words = sorted(combo)
    pieces = []
    for w in words:
        coeff = render_scalar(combo[w], datum.D)
        if "+" in coeff or "-" in coeff[1:]:
            coeff = "(" + coeff + ")"
        body = "*".join("%s%d" % (letter, i + 1) for i in w)
        if not body:
            pieces.append(coeff)
        elif coeff == "1":
            pieces.append(body)
        else:
            pieces.append(coeff + "*" + body)
    return WordCombo(
        words=[[i + 1 for i in w] for w in words],
        coefficients=[scalar_to_json(combo[w]) for w in words],
        text=" + ".join(pieces),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="qsuper", version=__version__)

    @app.exception_handler(ValueError)
    async def _bad_input(request, exc):
        return JSONResponse(
            status_code=400,
            content={"schema_version": SCHEMA_VERSION, "detail": str(exc)})

    @app.exception_handler(CacheCorruption)
    async def _bad_cache(request, exc):
        return JSONResponse(
            status_code=500,
            content={"schema_version": SCHEMA_VERSION,
                     "detail": "cache corruption: %s" % exc})

    @app.post("/v1/root-datum", response_model=DatumResponse)
    def root_datum(req: DatumRequest):
        dat = build_root_datum(req.type)
        return DatumResponse(
            schema_version=SCHEMA_VERSION,
            type=dat.descriptor,
            rank=dat.rank,
            parity=list(dat.parity),
            cartan=[[str(x) for x in row] for row in dat.cartan],
            simple_roots=[dat.render_weight(a) for a in dat.simple],
            positive_even=[dat.render_weight(dat.weight_from_vec(v))
                           for v in dat.pos_even_vec],
            positive_odd=[dat.render_weight(dat.weight_from_vec(v))
                          for v in dat.pos_odd_vec],
        )

    @app.post("/v1/normalize", response_model=ElementResponse)
    def normalize(req: ExprRequest):
        dat = build_root_datum(req.type)
        elem = parse_expression(dat, req.expr)
        return ElementResponse(schema_version=SCHEMA_VERSION,
                               text=render_element(elem),
                               terms=len(elem.terms))

    @app.post("/v1/pair", response_model=PairResponse)
    def pair(req: PairRequest):
        dat = build_root_datum(req.type)
        ctx = get_context(dat)
        seen = len(ctx.cache_warnings)
        value = rosso_form(ctx,
                           parse_expression(dat, req.left),
                           parse_expression(dat, req.right))
        return PairResponse(schema_version=SCHEMA_VERSION,
                            value=render_scalar(value, dat.D),
                            value_json=scalar_to_json(value),
                            cache_warnings=list(ctx.cache_warnings[seen:]))

    @app.post("/v1/dual-basis", response_model=DualBasisResponse)
    def dual_basis(req: WeightRequest):
        dat = build_root_datum(req.type)
        vec = parse_weight_vec(dat, req.weight)
        if any(x < 0 for x in vec):
            raise ValueError("dual bases live at nonnegative root weights")
        ctx = get_context(dat)
        seen = len(ctx.cache_warnings)
        lower, upper = ctx.dual_bases(vec)
        return DualBasisResponse(
            schema_version=SCHEMA_VERSION,
            weight=list(vec),
            rank=len(lower),
            lower=[_word_combo(dat, combo, "F") for combo in lower],
            upper=[_word_combo(dat, combo, "E") for combo in upper],
            cache_warnings=list(ctx.cache_warnings[seen:]),
        )

    @app.post("/v1/theta", response_model=ThetaResponse)
    def theta(req: ThetaRequest):
        dat = build_root_datum(req.type)
        tensor = quasi_r_matrix(dat, req.cutoff)
        terms = []
        for (ma, mb), coeff in sorted(tensor.terms.items()):
            terms.append(ThetaTerm(
                lower=render_element(_single(dat, ma)),
                upper=render_element(_single(dat, mb)),
                coefficient=render_scalar(coeff, dat.D),
            ))
        return ThetaResponse(schema_version=SCHEMA_VERSION,
                             cutoff=req.cutoff, terms=terms)

    @app.post("/v1/casimir", response_model=ElementResponse)
    def casimir_endpoint(req: CasimirRequest):
        dat = build_root_datum(req.type)
        mod = resolve_module(dat, req.module, req.depth)
        elem = casimir(mod, req.k)
        return ElementResponse(schema_version=SCHEMA_VERSION,
                               text=render_element(elem),
                               terms=len(elem.terms))

    @app.post("/v1/z-element", response_model=ElementResponse)
    def z_endpoint(req: ModuleRequest):
        dat = build_root_datum(req.type)
        mod = resolve_module(dat, req.module, req.depth)
        elem = z_element(mod)
        return ElementResponse(schema_version=SCHEMA_VERSION,
                               text=render_element(elem),
                               terms=len(elem.terms))

    @app.post("/v1/hc", response_model=HcResponse)
    def hc(req: ExprRequest):
        dat = build_root_datum(req.type)
        image = hc_project(parse_expression(dat, req.expr))
        return HcResponse(
            schema_version=SCHEMA_VERSION,
            text=render_element(image.to_element()),
            invariant=[InvariantTerm(**term) for term in image.to_payload()],
        )

    @app.post("/v1/check-central", response_model=CentralResponse)
    def check_central(req: ExprRequest):
        dat = build_root_datum(req.type)
        elem = parse_expression(dat, req.expr)
        return CentralResponse(schema_version=SCHEMA_VERSION,
                               central=is_central(elem))

    @app.post("/v1/check-wsup", response_model=WsupResponse)
    def check_wsup(req: WsupRequest):
        dat = build_root_datum(req.type)
        elem = parse_expression(dat, req.expr)
        report = wsup_membership(elem, mode=req.mode)
        return WsupResponse(schema_version=SCHEMA_VERSION,
                            ok=report.ok, mode=report.mode,
                            reasons=list(report.reasons))

    @app.post("/v1/character", response_model=CharacterResponse)
    def character(req: ModuleRequest):
        dat = build_root_datum(req.type)
        mod = resolve_module(dat, req.module, req.depth)
        ch, sch = characters(mod)
        lines = []
        for w in sorted(ch.coeffs,
                        key=lambda w: (sum(dat.vec_from_weight(w)),
                                       dat.vec_from_weight(w)),
                        reverse=True):
            vec = dat.vec_from_weight(w)
            lines.append(WeightLine(weight=dat.render_weight(w),
                                    vec=[str(x) for x in vec],
                                    dim=ch.coeffs[w],
                                    sdim=sch.coeffs.get(w, 0)))
        return CharacterResponse(schema_version=SCHEMA_VERSION,
                                 module=req.module, status=mod.status,
                                 dim=mod.dim, weights=lines)

    @app.post("/v1/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest):
        report = run_suite(req.type)
        return VerifyResponse(schema_version=SCHEMA_VERSION,
                              scope=report["scope"], ok=report["ok"],
                              rows=[CheckRow(**row) for row in report["rows"]])

    return app

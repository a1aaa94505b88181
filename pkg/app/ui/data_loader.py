from __future__ import annotations

import argparse
import logging

from app.core.errors import InvalidParamsError
from app.core.graph import Graph
from app.data.families import Family, FamilySpec, generate
from app.data.loader import LoadConfig, load_graph, parse_coords, read_source

logger = logging.getLogger(__name__)


def family_spec(args: argparse.Namespace) -> FamilySpec:
    """FamilySpec from the --family/--n/--m/--d/--p/--seed/--coords flags."""
    if args.family is None:
        raise InvalidParamsError("--family is required")
    family = Family.parse(args.family)
    coords = None
    if args.coords is not None:
        coords = parse_coords(read_source(args.coords))
    elif family is Family.LATTICE_SUBGRAPH:
        raise InvalidParamsError("lattice_subgraph needs --coords FILE")
    p_num, p_den = args.p
    return FamilySpec(family, n=args.n, m=args.m, d=args.d, p_num=p_num, p_den=p_den, seed=args.seed, coords=coords)


def load_data(args: argparse.Namespace) -> tuple[Graph, str]:
    """Graph from --input (a file or -) or from a family spec, with a source label."""
    if args.input is not None:
        if args.family is not None:
            raise InvalidParamsError("give either --input or --family, not both")
        return load_graph(args.input, LoadConfig(fmt=args.format)), str(args.input)
    if args.family is None:
        raise InvalidParamsError("an input file (-i) or a --family is required")
    spec = family_spec(args)
    logger.debug("generating %s", spec.label)
    return generate(spec), spec.label

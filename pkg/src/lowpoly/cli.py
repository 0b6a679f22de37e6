"""Command-line interface.

    triangulate <input> [--threshold N] [--density N] [--seed N]
                [--random-points N] [--no-frame] [--dump-stages] [--out PATH]
    triangulate sweep <input> --thresholds 25,50,75 --densities 35,60,85
                [--csv PATH] [--json PATH] [--seed N]
    triangulate serve [--host H] [--port N] [--cache-mb N] [--static-dir DIR]

Exit codes: 0 success, 2 parameter error, 3 degenerate input, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .errors import DecodeError, DegenerateInputError, LowpolyError, ParameterError
from .pipeline import PipelineConfig, run_pipeline, sweep
from .raster import GrayImage, decode_image, encode_gray, encode_image

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_DEGENERATE = 3
EXIT_IO = 4

SWEEP_FIELDS = [
    "threshold",
    "density",
    "seed",
    "edge_pixels",
    "vertices",
    "triangles",
    "total_ms",
    "error",
]


def _run_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="triangulate", description="Triangulate an image into low-poly art."
    )
    p.add_argument("input", help="input PNG or JPEG file")
    p.add_argument("--threshold", "-t", type=int, default=50, metavar="N",
                   help="edge magnitude cutoff in [0, 255] (default 50)")
    p.add_argument("--density", "-d", type=int, default=60, metavar="N",
                   help="keep floor(|S|/N) of the edge pixels (default 60)")
    p.add_argument("--seed", type=int, default=0, metavar="N",
                   help="seed for deterministic sampling (default 0)")
    p.add_argument("--random-points", type=int, default=None, metavar="N",
                   help="ignore edges and triangulate N random points instead")
    p.add_argument("--no-frame", action="store_true",
                   help="do not add the 4 canvas corners to the vertex set")
    p.add_argument("--dump-stages", action="store_true",
                   help="write *_gray/_sharp/_sobel/_wire PNGs plus mesh and stats JSON")
    p.add_argument("--out", type=Path, default=None, metavar="PATH",
                   help="final image path (default <input stem>_final.png)")
    return p


def _sweep_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="triangulate sweep",
        description="Run the pipeline over a threshold x density grid.",
    )
    p.add_argument("input", help="input PNG or JPEG file")
    p.add_argument("--thresholds", required=True, metavar="LIST",
                   help="comma-separated threshold values, e.g. 25,50,75")
    p.add_argument("--densities", required=True, metavar="LIST",
                   help="comma-separated density values, e.g. 35,60,85")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--csv", type=Path, default=None, metavar="PATH",
                   help="write the result table as CSV")
    p.add_argument("--json", type=Path, default=None, metavar="PATH",
                   help="write the result table as JSON")
    return p


def _serve_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="triangulate serve",
        description="Serve the triangulation HTTP API and tuner UI.",
    )
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--cache-mb", type=int, default=256,
                   help="LRU byte budget for triangulation results (default 256)")
    p.add_argument("--max-upload-mb", type=int, default=32)
    p.add_argument("--static-dir", type=Path, default=None,
                   help="directory with the built tuner UI (default: autodetect)")
    return p


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise ParameterError(f"{what} must be a comma-separated integer list, got {text!r}")
    if not values:
        raise ParameterError(f"{what} must not be empty")
    return values


def _read_image(path: str):
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise DecodeError(f"cannot read {path}: {e}") from e
    return decode_image(data)


def _cmd_run(argv: list[str]) -> int:
    args = _run_parser().parse_args(argv)
    img = _read_image(args.input)
    cfg = PipelineConfig(
        threshold=args.threshold,
        density=args.density,
        seed=args.seed,
        random_mode=args.random_points,
        include_frame=not args.no_frame,
        dump_stages=args.dump_stages,
    )
    result = run_pipeline(img, cfg)
    stem = Path(args.input).stem
    out = args.out if args.out else Path(f"{stem}_final.png")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(encode_image(result.image))
    if args.dump_stages:
        base = out.parent / stem
        stages = result.stages
        Path(f"{base}_gray.png").write_bytes(encode_gray(stages.gray))
        Path(f"{base}_sharp.png").write_bytes(encode_gray(stages.sharp))
        Path(f"{base}_sobel.png").write_bytes(
            encode_gray(GrayImage(stages.edges.magnitudes))
        )
        Path(f"{base}_wire.png").write_bytes(encode_image(stages.wireframe))
        Path(f"{base}_mesh.json").write_text(result.triangulation.to_json())
        stats_doc = {"config": cfg.to_dict(), **result.stats.to_dict()}
        Path(f"{base}_stats.json").write_text(json.dumps(stats_doc, indent=2))
    s = result.stats
    print(
        f"{args.input}: |S|={s.edge_pixel_count} vertices={s.vertex_count} "
        f"triangles={s.triangle_count} -> {out}"
    )
    return EXIT_OK


def _cmd_sweep(argv: list[str]) -> int:
    args = _sweep_parser().parse_args(argv)
    t_values = _parse_int_list(args.thresholds, "--thresholds")
    d_values = _parse_int_list(args.densities, "--densities")
    img = _read_image(args.input)
    rows = sweep(img, t_values, d_values, seed=args.seed)
    if args.csv:
        with open(args.csv, "w", newline="") as f:
            w = csv.DictWriter(f, fieldnames=SWEEP_FIELDS)
            w.writeheader()
            w.writerows(rows)
    if args.json:
        args.json.write_text(json.dumps(rows, indent=2))
    if not args.csv and not args.json:
        w = csv.DictWriter(sys.stdout, fieldnames=SWEEP_FIELDS)
        w.writeheader()
        w.writerows(rows)
    return EXIT_OK


def _cmd_serve(argv: list[str]) -> int:
    args = _serve_parser().parse_args(argv)
    import uvicorn

    from .service import create_app

    app = create_app(
        cache_mb=args.cache_mb,
        max_upload_mb=args.max_upload_mb,
        static_dir=args.static_dir,
    )
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and argv[0] == "sweep":
            return _cmd_sweep(argv[1:])
        if argv and argv[0] == "serve":
            return _cmd_serve(argv[1:])
        return _cmd_run(argv)
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER
    except DegenerateInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (DecodeError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except LowpolyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())

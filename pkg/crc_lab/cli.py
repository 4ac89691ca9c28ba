"""
Command-line surface: construct, verify and graph.

Every command prints one JSON document to stdout:
  success → {"success": true, ...}
  failure → {"success": false, "error": ..., "error_type": ...}
Diagnostics and progress go to stderr. verify exits 1 when any non-audit
assertion fails, even though the report itself was produced.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from .checks import CHECK_CLASSES, VerificationContext, run_verification
from .config import Config, _get_default_config
from .constructions import FAMILIES, build_family
from .coset_graph import write_dot, write_edge_list

GRAPH_FORMATS = ('edges', 'dot')

# CLI flag -> check name
CHECK_FLAGS = {
    'cr': 'cr',
    'ct': 'ct',
    'graph': 'graph',
    'spectra': 'spectra',
    'lemma32': 'lemma32',
    'inverse_array': 'inverse_array',
}


def _output_path(config: Config, pattern_key: str, out: Optional[str], **fields: Any) -> Path:
    if out:
        path = Path(out)
    else:
        output = config.get_output_config()
        path = Path(output['output_dir']) / output[pattern_key].format(**fields)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def cmd_construct(args: argparse.Namespace, config: Config) -> Tuple[Dict[str, Any], bool]:
    """Build the code and write its G/H matrices in the matrix text format."""
    code = build_family(args.family, args.m)
    path = _output_path(config, 'code_file_pattern', args.out, family=args.family, m=args.m)
    path.write_text(code.to_text())
    print(f"📄 Wrote [{code.n},{code.k}] code to {path}", file=sys.stderr)
    return {
        'family': args.family,
        'm': args.m,
        'n': code.n,
        'k': code.k,
        'file': str(path),
    }, True


def _requested_checks(args: argparse.Namespace) -> List[str]:
    if args.all:
        return list(CHECK_CLASSES)
    return [check for flag, check in CHECK_FLAGS.items() if getattr(args, flag)]


def cmd_verify(args: argparse.Namespace, config: Config) -> Tuple[Dict[str, Any], bool]:
    """Run the selected checks; the parameters check always runs."""
    context = VerificationContext(args.family, args.m, config, unsafe_large=args.unsafe_large)
    report = run_verification(context, _requested_checks(args), timing=args.timing)
    if report.passed:
        print(f"✅ {context.describe()}: all assertions passed", file=sys.stderr)
    else:
        print(f"❌ {context.describe()}: {len(report.failures)} assertion(s) failed", file=sys.stderr)
    return report.to_json_dict(), report.passed


def cmd_graph(args: argparse.Namespace, config: Config) -> Tuple[Dict[str, Any], bool]:
    """Export the coset graph as an edge list or DOT."""
    context = VerificationContext(args.family, args.m, config, unsafe_large=args.unsafe_large)
    g = context.graph
    text = write_edge_list(g) if args.format == 'edges' else write_dot(g)
    path = _output_path(config, 'graph_file_pattern', args.out, family=args.family, m=args.m, ext=args.format)
    path.write_text(text)
    print(f"📄 Wrote {g!r} to {path}", file=sys.stderr)
    return {
        'family': args.family,
        'm': args.m,
        'format': args.format,
        'vertices': g.vertex_count,
        'edges': g.edge_count,
        'file': str(path),
    }, True


def _add_code_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('family', choices=FAMILIES, help="Code family: Cm = C^(m), Cm-union = C^[m]")
    parser.add_argument('m', type=int, help="Number of points (columns are the 2-subsets of m points)")
    parser.add_argument('--config_path', help="Path to config file (optional)", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='crclab',
        description='Construct and exhaustively verify completely regular codes and their coset graphs.',
    )
    commands = parser.add_subparsers(dest='command', required=True)

    construct = commands.add_parser('construct', help='Write the generator and parity-check matrices')
    _add_code_arguments(construct)
    construct.add_argument('--out', help="Output file (default: output_dir/code_file_pattern)", default=None)
    construct.set_defaults(handler=cmd_construct)

    verify = commands.add_parser('verify', help='Run verifications and print a JSON report')
    _add_code_arguments(verify)
    verify.add_argument('--all', action='store_true', help="Run every check")
    verify.add_argument('--cr', action='store_true', help="Complete regularity and intersection arrays")
    verify.add_argument('--ct', action='store_true', help="Complete transitivity under S_m")
    verify.add_argument('--graph', action='store_true', help="Coset graph suite")
    verify.add_argument('--spectra', action='store_true', help="Spectrum oracles and eigenvalue-formula audit")
    verify.add_argument('--lemma32', action='store_true', help="weight(s) + weight(s + syndrome(1)) = rho")
    verify.add_argument('--inverse-array', dest='inverse_array', action='store_true',
                        help="Profile of C + 1 equals the inverse array")
    verify.add_argument('--unsafe-large', dest='unsafe_large', action='store_true', help="Lift every enumeration guard")
    verify.add_argument('--timing', action='store_true', help="Include per-check timings in the report")
    verify.set_defaults(handler=cmd_verify)

    graph = commands.add_parser('graph', help='Export the coset graph')
    _add_code_arguments(graph)
    graph.add_argument('--format', choices=GRAPH_FORMATS, default='edges', help="edges: 'u v' lines; dot: Graphviz")
    graph.add_argument('--out', help="Output file (default: output_dir/graph_file_pattern)", default=None)
    graph.add_argument('--unsafe-large', dest='unsafe_large', action='store_true', help="Lift the graph guard")
    graph.set_defaults(handler=cmd_graph)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        config = _get_default_config(args.config_path)
        result, passed = args.handler(args, config)
        output_json = {'success': True}
        output_json.update(result)
        print(json.dumps(output_json, ensure_ascii=False), file=sys.stdout)
        return 0 if passed else 1
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        error_json = {
            'success': False,
            'error': str(e),
            'error_type': type(e).__name__
        }
        print(json.dumps(error_json, ensure_ascii=False), file=sys.stdout)
        return 1


if __name__ == "__main__":
    sys.exit(main())

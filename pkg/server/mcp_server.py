#!/usr/bin/env python3
"""
MCP server for the surface obstruction toolkit.
Exposes the group, Seifert, pretzel, surface-check and reproduction commands
as tools over stdio. Logs go to stderr; stdout carries the protocol.
"""
import asyncio
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List

# MCP imports
try:
    from mcp.server import Server
    from mcp.types import Tool, TextContent
    import mcp.server.stdio
except ImportError:
    print("❌ MCP not installed. Run: pip install mcp", file=sys.stderr)
    sys.exit(1)

# Add current directory to path
sys.path.insert(0, str(Path(__file__).parent))

from config import load_config
from report import render_human
from toolkit import GROUP_SUBCOMMANDS, PRETZEL_SUBCOMMANDS, SEIFERT_SUBCOMMANDS, SurfaceToolkit

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger("surface-mcp-server")


def _subcommand(choices) -> Dict[str, Any]:
    return {"type": "string", "enum": list(choices)}


TOOLS = [
    Tool(
        name="group",
        description="Finitely presented group calculus: abelianization, deficiency, b2 bound, "
                    "Todd-Coxeter, Reidemeister-Schreier, permutation quotient order",
        inputSchema={
            "type": "object",
            "properties": {
                "subcommand": _subcommand(GROUP_SUBCOMMANDS),
                "presentation": {"type": "string", "description": "e.g. <x,y | x^2, y^3, (x*y)^7>"},
                "subgroup": {"type": "string", "description": "comma-separated subgroup words"},
                "max_cosets": {"type": "integer", "minimum": 1},
                "images": {"type": "string", "description": "0-based permutations, ';'-separated"},
            },
            "required": ["subcommand", "presentation"],
        },
    ),
    Tool(
        name="seifert",
        description="Seifert fibered spaces over S2: pi1, h1, euler, kill-fiber",
        inputSchema={
            "type": "object",
            "properties": {
                "subcommand": _subcommand(SEIFERT_SUBCOMMANDS),
                "space": {"type": "string", "description": "e.g. S2(0; 1/2, -1/3, -1/7)"},
            },
            "required": ["subcommand", "space"],
        },
    ),
    Tool(
        name="pretzel",
        description="Pretzel knots: determinant, Goeritz matrix, double branched cover",
        inputSchema={
            "type": "object",
            "properties": {
                "subcommand": _subcommand(PRETZEL_SUBCOMMANDS),
                "knot": {"type": "string", "description": "e.g. P(-2,3,7)"},
            },
            "required": ["subcommand", "knot"],
        },
    ),
    Tool(
        name="surface_check",
        description="Run the stable-irreducibility, 2-knot and RP2-splitting checks on a surface spec",
        inputSchema={
            "type": "object",
            "properties": {
                "spec_text": {"type": "string", "description": "contents of a surface spec file"},
                "sweep": {"type": "integer", "minimum": 1},
            },
            "required": ["spec_text"],
        },
    ),
    Tool(
        name="paper_verify",
        description="Run the full reproduction suite",
        inputSchema={
            "type": "object",
            "properties": {"sweep": {"type": "integer", "minimum": 1}},
            "required": [],
        },
    ),
]


class SurfaceMCPServer:
    """stdio MCP server wrapping SurfaceToolkit"""

    def __init__(self):
        self.server = Server("surface-obstruction")
        self.toolkit = SurfaceToolkit(load_config())
        self._register_handlers()
        logger.info(f"🔧 MCP server initialized with {len(TOOLS)} tools")

    def _register_handlers(self):
        @self.server.list_tools()
        async def handle_list_tools() -> List[Tool]:
            return TOOLS

        @self.server.call_tool()
        async def handle_tool_call(name: str, arguments: Dict[str, Any]) -> List[TextContent]:
            try:
                report = await self.toolkit.execute_tool(name, arguments or {})
                logger.info(f"✅ Tool {name} finished with exit code {report.exit_code}")
                return [TextContent(type="text", text=render_human(report, show_trace=True))]
            except Exception as e:
                error_msg = f"❌ Tool execution failed: {e}"
                logger.error(error_msg, exc_info=True)
                return [TextContent(type="text", text=error_msg)]


async def main():
    logger.info("🚀 Starting surface obstruction MCP server")
    try:
        surface_server = SurfaceMCPServer()
        async with mcp.server.stdio.stdio_server() as (read_stream, write_stream):
            await surface_server.server.run(
                read_stream,
                write_stream,
                surface_server.server.create_initialization_options(),
            )
    except KeyboardInterrupt:
        logger.info("🛑 Server stopped by user")
    except Exception as e:
        logger.error(f"❌ Server error: {e}", exc_info=True)
        sys.exit(1)
    finally:
        logger.info("👋 MCP server shutdown complete")


if __name__ == "__main__":
    asyncio.run(main())

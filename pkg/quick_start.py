#!/usr/bin/env python3
"""
Quick Start Script for the surface obstruction toolkit
Checks the installation and runs a short smoke test
"""

import sys
import asyncio
import subprocess
from pathlib import Path

ROOT = Path(__file__).parent


def print_banner():
    """Print welcome banner"""
    print("""
🚀 SURFACE OBSTRUCTION TOOLKIT - QUICK START
============================================

Checks that the engine, the client and their dependencies are in place.
    """)


def check_python_version():
    if sys.version_info < (3, 9):
        print("❌ Python 3.9+ is required")
        print(f"Current version: {sys.version}")
        return False

    print(f"✅ Python version: {sys.version.split()[0]}")
    return True


def check_file_structure():
    """Check if all required files exist"""
    print("\n🔍 Checking file structure...")

    required_files = {
        'server/exactlinalg.py': '🔢 Exact linear algebra',
        'server/fpgroup.py': '🧩 Finitely presented groups',
        'server/seifert.py': '🧵 Seifert fibered spaces',
        'server/pretzel.py': '🥨 Pretzel knots',
        'server/obstruct.py': '🧱 Obstruction checks',
        'server/surface_file.py': '📄 Surface spec reader',
        'server/toolkit.py': '🔧 Command layer',
        'server/paper_suite.py': '📚 Reproduction suite',
        'server/config.py': '⚙️ Engine Config',
        'server/mcp_server.py': '🔌 MCP Server',
        'client/surface_client.py': '💻 Command-line client',
        'client/modules/config.py': '⚙️ Client Config',
        'client/modules/formatters.py': '🎨 Formatters',
    }

    missing_files = []
    for file_path, description in required_files.items():
        if (ROOT / file_path).exists():
            print(f"  ✅ {description}: {file_path}")
        else:
            print(f"  ❌ {description}: {file_path} (MISSING)")
            missing_files.append(file_path)

    if missing_files:
        print(f"\n❌ Missing {len(missing_files)} required files")
        return False

    print("✅ All required files present")
    return True


def check_dependencies():
    """Check if required packages are installed"""
    print("\n📦 Checking dependencies...")

    required_packages = {'mcp': 'mcp', 'python-dotenv': 'dotenv', 'sympy': 'sympy', 'pytest': 'pytest'}

    missing_packages = []
    for package, module in required_packages.items():
        try:
            __import__(module)
            print(f"  ✅ {package}")
        except ImportError:
            print(f"  ❌ {package} (MISSING)")
            missing_packages.append(package)

    if missing_packages:
        print(f"\n❌ Missing {len(missing_packages)} required packages")
        print(f"pip install {' '.join(missing_packages)}")
        return False

    print("✅ All dependencies installed")
    return True


def check_env_files():
    """.env files are optional; defaults cover every setting."""
    print("\n🔧 Checking environment configuration...")
    for env_path in [ROOT / 'server/.env', ROOT / 'client/.env', ROOT / '.env']:
        if env_path.exists():
            print(f"  ✅ Found: {env_path.relative_to(ROOT)}")
        else:
            print(f"  ℹ️ Not present: {env_path.relative_to(ROOT)} (defaults apply)")
    return True


async def run_client(*args: str) -> bool:
    command = [sys.executable, str(ROOT / 'client' / 'surface_client.py'), *args]
    print(f"  ▶️ {' '.join(args)}")
    result = await asyncio.to_thread(subprocess.run, command, capture_output=True, text=True, timeout=600)
    if result.returncode == 0:
        print("  ✅ exit code 0")
        return True
    print(f"  ❌ exit code {result.returncode}")
    print(result.stdout[-2000:] or result.stderr[-2000:])
    return False


async def run_full_test():
    """Smoke-test the client end to end"""
    print("\n🧪 RUNNING SMOKE TESTS")
    print("=" * 40)

    smoke = [
        ("group", "abelianize", "<x,y,z | x^2, y^3, z^7, x*y*z>"),
        ("seifert", "kill-fiber", "S2(0; 1/2, -1/3, -1/7)"),
        ("pretzel", "dbc", "P(-2,3,7)"),
        ("surface-check", str(ROOT / 'surfaces' / 'corollary_klein.surf'), "--sweep", "3"),
        ("paper-verify", "--sweep", "2"),
    ]
    all_passed = True
    for args in smoke:
        if not await run_client(*args):
            all_passed = False

    print(f"\n{'✅ ALL TESTS PASSED' if all_passed else '❌ SOME TESTS FAILED'}")
    return all_passed


def show_usage_examples():
    print("""
📚 USAGE EXAMPLES
=================

CLIENT:
  cd client
  python surface_client.py group abelianize "<x,y,z | x^2, y^3, z^7, x*y*z>"
  python surface_client.py group todd-coxeter "<x,y | x^2, y^3, (x*y)^7, (x^-1*y^-1*x*y)^4>"
  python surface_client.py group schreier "<x,y | x^2, y^3, (x*y)^7>" --images "7,6,3,2,5,4,1,0; 7,0,4,3,6,5,2,1"
  python surface_client.py seifert kill-fiber "S2(0; 1/2, -1/3, -1/7)"
  python surface_client.py pretzel dbc "P(-2,3,7)"
  python surface_client.py surface-check ../surfaces/corollary_torus.surf --trace
  python surface_client.py paper-verify --machine

MCP SERVER:
  cd server
  python mcp_server.py                   # stdio transport

TESTS:
  pytest
    """)


def main():
    print_banner()

    if len(sys.argv) > 1:
        if sys.argv[1] == '--test':
            success = asyncio.run(run_full_test())
            sys.exit(0 if success else 1)
        elif sys.argv[1] == '--examples':
            show_usage_examples()
            return
        elif sys.argv[1] == '--help':
            print("""
Usage:
  python quick_start.py             # Run setup checks
  python quick_start.py --test      # Run smoke tests through the client
  python quick_start.py --examples  # Show usage examples
  python quick_start.py --help      # Show this help
            """)
            return

    print("🔍 RUNNING SETUP CHECKS")
    print("=" * 30)

    checks = [
        ("Python Version", check_python_version),
        ("File Structure", check_file_structure),
        ("Dependencies", check_dependencies),
        ("Environment Files", check_env_files),
    ]

    all_passed = True
    for check_name, check_func in checks:
        print(f"\n{check_name}:")
        if not check_func():
            all_passed = False

    print(f"\n{'=' * 30}")
    if all_passed:
        print("✅ ALL CHECKS PASSED!")
        print("\n📋 Next steps: python quick_start.py --test")
    else:
        print("❌ SOME CHECKS FAILED")
        print("\n🔧 Install missing dependencies: pip install -r requirements.txt")

    print("\n📚 For help: python quick_start.py --help")


if __name__ == "__main__":
    main()

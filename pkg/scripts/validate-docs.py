#!/usr/bin/env python3
"""
Documentation validation script for ce-calabi.

Checks that every module referenced by the API pages exists in the package
and, when the HTML build is present, that the build is complete and its
internal links resolve.
"""

import re
import sys
from pathlib import Path
from typing import Dict, List

ROOT = Path(__file__).resolve().parent.parent
DOCS_DIR = ROOT / "docs"
BUILD_DIR = DOCS_DIR / "_build" / "html"
SOURCE_DIR = ROOT / "src"

AUTOMODULE = re.compile(r"^\.\. automodule:: ([\w.]+)", re.MULTILINE)
HREF = re.compile(r'href=["\']([^"\']*\.html[^"\']*?)["\']')


class DocumentationValidator:
    """Collects issues across the source pages and the HTML build."""

    def __init__(self, docs_dir: Path = DOCS_DIR, build_dir: Path = BUILD_DIR):
        self.docs_dir = docs_dir
        self.build_dir = build_dir
        self.issues: List[Dict[str, str]] = []

    def log_issue(self, severity: str, category: str, message: str) -> None:
        """Log a validation issue."""
        self.issues.append(
            {"severity": severity, "category": category, "message": message}
        )

    def validate_api_modules(self) -> bool:
        """Every ``automodule`` target must be a module of the package."""
        print("🔍 Validating API module references...")
        ok = True
        for page in sorted((self.docs_dir / "api").glob("*.rst")):
            for module in AUTOMODULE.findall(page.read_text(encoding="utf-8")):
                path = SOURCE_DIR.joinpath(*module.split("."))
                if not (path.with_suffix(".py").exists() or (path / "__init__.py").exists()):
                    self.log_issue("error", "api", f"{page.name}: no module {module}")
                    ok = False
        if ok:
            print("  ✅ All API modules resolve")
        return ok

    def validate_build(self) -> bool:
        """Required pages exist and internal links resolve."""
        print("🔍 Validating HTML build...")
        if not self.build_dir.exists():
            self.log_issue("warning", "build", f"{self.build_dir} not built, skipped")
            return True

        ok = True
        for required in ("index.html", "search.html", "genindex.html", "api/index.html"):
            if not (self.build_dir / required).exists():
                self.log_issue("error", "structure", f"Missing required file: {required}")
                ok = False

        for html_file in self.build_dir.rglob("*.html"):
            content = html_file.read_text(encoding="utf-8")
            for link in HREF.findall(content):
                if link.startswith("http"):
                    continue
                link_path = link.split("#")[0]
                if link_path and not (html_file.parent / link_path).resolve().exists():
                    self.log_issue("error", "links", f"{html_file.name} -> {link}")
                    ok = False
        if ok:
            print("  ✅ HTML build is complete")
        return ok

    def validate_all(self) -> bool:
        """Run all validations."""
        results = [self.validate_api_modules(), self.validate_build()]
        return all(results)


def main() -> None:
    """Main validation function."""
    validator = DocumentationValidator()
    success = validator.validate_all()

    print()
    print(f"Status: {'✅ PASSED' if success else '❌ FAILED'}")
    for issue in validator.issues:
        print(f"  [{issue['severity']}] {issue['category']}: {issue['message']}")

    sys.exit(0 if success else 1)


if __name__ == "__main__":
    main()

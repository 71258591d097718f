"""
primary metadata importer.
Reads metadata > package > (name, description, format > provides/requires > entry[@name]).
"""

import logging
from typing import Dict, List

from lxml import etree

from ..errors import MissingField
from .models import PackageMeta, ParseResult
from .xml_utils import children, first_child, parse_document, untranslated_text

logger = logging.getLogger(__name__)


def parse_primary(xml_bytes: bytes) -> ParseResult[PackageMeta]:
    """Parse a primary document into package records.

    A name seen twice (e.g. one package built for two arches) keeps its first
    position but takes the fields of the last occurrence.

    Raises:
        MalformedXml: unparseable bytes or a non-metadata root
        MissingField: a package without a name
    """
    root = parse_document(xml_bytes, "metadata")
    result: ParseResult[PackageMeta] = ParseResult()
    packages: Dict[str, PackageMeta] = {}

    for position, package_el in enumerate(children(root, "package")):
        name = untranslated_text(package_el, "name")
        if not name:
            raise MissingField(f"package #{position + 1} has no <name>")

        format_el = first_child(package_el, "format")
        package = PackageMeta(
            name=name,
            description=untranslated_text(package_el, "description") or "",
            provides=_capabilities(format_el, "provides"),
            requires=_capabilities(format_el, "requires"),
        )
        if name in packages:
            result.warnings.append(f"package '{name}' listed more than once, last occurrence kept")
        packages[name] = package

    result.items = list(packages.values())
    for warning in result.warnings:
        logger.warning(warning)
    logger.info(f"Parsed {len(result.items)} packages from primary ({result.warning_count} warnings)")
    return result


def _capabilities(format_el: etree._Element, kind: str) -> List[str]:
    """Entry names under format/<kind>."""
    if format_el is None:
        return []
    section = first_child(format_el, kind)
    if section is None:
        return []
    names = []
    for entry in children(section, "entry"):
        name = (entry.get("name") or "").strip()
        if name:
            names.append(name)
    return names

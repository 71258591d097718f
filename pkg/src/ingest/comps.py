"""
comps XML importer.
Reads comps > group > (id, name, description, packagelist > packagereq[@type]).
"""

import logging
from typing import Dict, List, Set

from lxml import etree

from ..config.constants import RequirementLevel
from ..errors import DuplicateGroupId, MissingField
from .models import GroupDef, PackageEntry, ParseResult
from .xml_utils import children, first_child, parse_document, untranslated_text

logger = logging.getLogger(__name__)

# comps types outside the three weighted levels (conditional, unknown) fall back to optional
_LEVELS: Dict[str, RequirementLevel] = {level.value: level for level in RequirementLevel}


def parse_comps(xml_bytes: bytes) -> ParseResult[GroupDef]:
    """Parse a comps document into groups.

    Args:
        xml_bytes: raw comps XML

    Returns:
        ParseResult with one GroupDef per <group>, in document order, and
        one warning per remapped or skipped package entry

    Raises:
        MalformedXml: unparseable bytes or a non-comps root
        MissingField: a group without an id
        DuplicateGroupId: two groups share an id
    """
    root = parse_document(xml_bytes, "comps")
    result: ParseResult[GroupDef] = ParseResult()
    seen_ids: Set[str] = set()

    for position, group_el in enumerate(children(root, "group")):
        group_id = untranslated_text(group_el, "id")
        if not group_id:
            raise MissingField(f"group #{position + 1} has no <id>")
        if group_id in seen_ids:
            raise DuplicateGroupId(f"group id '{group_id}' appears more than once")
        seen_ids.add(group_id)

        entries = _parse_packagelist(group_el, group_id, result.warnings)
        result.items.append(
            GroupDef(
                id=group_id,
                name=untranslated_text(group_el, "name") or "",
                description=untranslated_text(group_el, "description") or "",
                packages=entries,
            )
        )

    for warning in result.warnings:
        logger.warning(warning)
    logger.info(f"Parsed {len(result.items)} groups from comps ({result.warning_count} warnings)")
    return result


def _parse_packagelist(
    group_el: etree._Element, group_id: str, warnings: List[str]
) -> List[PackageEntry]:
    """Read packagereq entries of one group."""
    packagelist = first_child(group_el, "packagelist")
    if packagelist is None:
        return []

    entries: List[PackageEntry] = []
    names: Set[str] = set()
    for req in children(packagelist, "packagereq"):
        name = (req.text or "").strip()
        if not name:
            warnings.append(f"group '{group_id}': empty packagereq skipped")
            continue
        if name in names:
            warnings.append(f"group '{group_id}': duplicate packagereq '{name}' skipped")
            continue

        req_type = (req.get("type") or RequirementLevel.MANDATORY.value).strip().lower()
        level = _LEVELS.get(req_type)
        if level is None:
            warnings.append(
                f"group '{group_id}': packagereq '{name}' has type '{req_type}', mapped to optional"
            )
            level = RequirementLevel.OPTIONAL

        names.add(name)
        entries.append(PackageEntry(name=name, requirement=level))
    return entries

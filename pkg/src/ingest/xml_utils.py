"""
Shared lxml helpers for repodata parsing.
Elements are matched by local name so namespace prefixes never matter.
"""

from typing import Iterator, Optional

from lxml import etree

from ..errors import MalformedXml

XML_LANG = "{http://www.w3.org/XML/1998/namespace}lang"


def _parser() -> etree.XMLParser:
    return etree.XMLParser(
        resolve_entities=False,
        no_network=True,
        huge_tree=False,
        remove_comments=True,
        remove_pis=True,
    )


def parse_document(xml_bytes: bytes, root_name: str) -> etree._Element:
    """Parse bytes and check the root element's local name.

    Raises:
        MalformedXml: unparseable bytes or an unexpected root element
    """
    if not isinstance(xml_bytes, (bytes, bytearray, memoryview)):
        raise MalformedXml(f"expected bytes, got {type(xml_bytes).__name__}")
    try:
        root = etree.fromstring(bytes(xml_bytes), parser=_parser())
    except (etree.LxmlError, ValueError) as e:
        raise MalformedXml(str(e) or "unparseable XML") from e
    if root is None:
        raise MalformedXml("empty document")
    if local_name(root) != root_name:
        raise MalformedXml(f"expected <{root_name}> root, found <{local_name(root)}>")
    return root


def local_name(element: etree._Element) -> str:
    """Tag without namespace; empty for comments and processing instructions."""
    if not isinstance(element.tag, str):
        return ""
    return etree.QName(element).localname


def children(element: etree._Element, name: str) -> Iterator[etree._Element]:
    """Direct children with the given local name, in document order."""
    for child in element:
        if local_name(child) == name:
            yield child


def first_child(element: etree._Element, name: str) -> Optional[etree._Element]:
    """First direct child with the given local name."""
    return next(children(element, name), None)


def untranslated_text(element: etree._Element, name: str) -> Optional[str]:
    """Stripped text of the child without xml:lang, falling back to the first match."""
    candidates = list(children(element, name))
    if not candidates:
        return None
    chosen = next((c for c in candidates if c.get(XML_LANG) is None), candidates[0])
    return (chosen.text or "").strip()

"""Shipped language descriptors for BPMN 2.0, EPC, and UML activity diagrams.

Counting rule for the three complexity counts: ``elements`` tallies the
distinct modeling element types of the notation's commonly used core set
(events by position, activity kinds, gateway/connector kinds, data and
swimlane constructs); ``characteristics`` tallies marker and decoration
variants aggregated over those elements; ``relations`` tallies the kinds
of connections an element can participate in. The pattern tables list only
fully or partially supported patterns; everything else in the catalog
counts as unsupported. All values are editable estimates, not normative
constants; export them with `init` and adjust to your own tallies.

Pattern ids follow the standard workflow-pattern catalogs: wcp-N for the
20 classic control-flow patterns, wdp-N for the 40 data patterns, wrp-N
for the 43 resource patterns.
"""

from __future__ import annotations

_CONTROL_FLOW_NAMES = {
    1: "Sequence",
    2: "Parallel Split",
    3: "Synchronization",
    4: "Exclusive Choice",
    5: "Simple Merge",
    6: "Multi-Choice",
    7: "Structured Synchronizing Merge",
    8: "Multi-Merge",
    9: "Structured Discriminator",
    10: "Arbitrary Cycles",
    11: "Implicit Termination",
    12: "Multiple Instances without Synchronization",
    13: "Multiple Instances with Design-Time Knowledge",
    14: "Multiple Instances with Run-Time Knowledge",
    15: "Multiple Instances without Run-Time Knowledge",
    16: "Deferred Choice",
    17: "Interleaved Parallel Routing",
    18: "Milestone",
    19: "Cancel Activity",
    20: "Cancel Case",
}

_DATA_NAMES = {
    1: "Task Data",
    2: "Block Data",
    3: "Scope Data",
    4: "Multiple Instance Data",
    5: "Case Data",
    8: "Environment Data",
    9: "Data Interaction between Tasks",
    15: "Task to Environment - Push",
    16: "Environment to Task - Pull",
    17: "Environment to Task - Push",
    18: "Task to Environment - Pull",
    26: "Data Transfer by Value - Incoming",
    27: "Data Transfer by Value - Outgoing",
    33: "Data-based Routing",
}

_RESOURCE_NAMES = {
    1: "Direct Distribution",
    2: "Role-Based Distribution",
    3: "Deferred Distribution",
    4: "Authorization",
    11: "Automatic Execution",
}

_CATALOG_SIZES = {"control-flow": 20, "data": 40, "resource": 43}


def _entries(ptype: str, names: dict[int, str], full: list[int], partial: list[int]) -> list[dict]:
    prefix = {"control-flow": "wcp", "data": "wdp", "resource": "wrp"}[ptype]
    rows = []
    for number in sorted(full + partial):
        rows.append({
            "id": f"{prefix}-{number}",
            "name": names.get(number, ""),
            "type": ptype,
            "support": "full" if number in full else "partial",
        })
    return rows


def _descriptor(name, elements, characteristics, relations, cf_full, cf_partial,
                d_full, d_partial, r_full, r_partial) -> dict:
    return {
        "version": "1",
        "name": name,
        "elements": elements,
        "characteristics": characteristics,
        "relations": relations,
        "pattern_catalog": dict(_CATALOG_SIZES),
        "patterns": (
            _entries("control-flow", _CONTROL_FLOW_NAMES, cf_full, cf_partial)
            + _entries("data", _DATA_NAMES, d_full, d_partial)
            + _entries("resource", _RESOURCE_NAMES, r_full, r_partial)
        ),
    }


def language_documents() -> dict[str, dict]:
    return {
        "bpmn": _descriptor(
            "BPMN 2.0", 41, 18, 4,
            cf_full=[1, 2, 3, 4, 5, 6, 8, 10, 11, 12, 13, 14, 16, 19, 20],
            cf_partial=[7, 9, 17],
            d_full=[1, 2, 5, 8, 9, 15, 16, 17, 18, 26, 27, 33],
            d_partial=[3, 4],
            r_full=[1, 2, 3, 11],
            r_partial=[4],
        ),
        "epc": _descriptor(
            "EPC", 14, 5, 3,
            cf_full=[1, 2, 3, 4, 5, 6],
            cf_partial=[7, 10, 11],
            d_full=[1, 5],
            d_partial=[],
            r_full=[],
            r_partial=[],
        ),
        "uml-ad": _descriptor(
            "UML Activity Diagram", 23, 9, 4,
            cf_full=[1, 2, 3, 4, 5, 6, 8, 10, 11, 12, 13, 14],
            cf_partial=[16, 19],
            d_full=[1, 2, 3, 9, 15, 18, 26],
            d_partial=[33],
            r_full=[1, 11],
            r_partial=[],
        ),
    }

from ._aoaforge import (
    Activity,
    Conversion,
    Dummy,
    Event,
    Network,
    NetworkStats,
    Schedule,
    ScheduleRow,
    ScheduleTable,
    convert,
    generate_table,
    levels,
    parse_table,
    schedule,
)

__all__ = [
    "Activity",
    "Conversion",
    "Dummy",
    "Event",
    "Network",
    "NetworkStats",
    "Schedule",
    "ScheduleRow",
    "ScheduleTable",
    "convert",
    "generate_table",
    "levels",
    "parse_table",
    "schedule",
]

#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.
"""Formatters."""

import csv
import dataclasses
import io
import json
import logging
import typing

from pythonjsonlogger import json as jsonlogger


@dataclasses.dataclass
class Report:
    """Result of a command.

    ``headers`` and ``rows`` feed the tabular formats. ``text`` replaces the
    table in the text format when set (diagrams, matrices). ``data`` replaces
    the rows in the JSON format when set. ``sections`` are reports printed
    after this one; in JSON they are stored under their ``key``.
    """

    title: str
    headers: typing.List[str] = dataclasses.field(default_factory=list)
    rows: typing.List[typing.List[typing.Any]] = dataclasses.field(
        default_factory=list
    )
    text: typing.Optional[str] = None
    data: typing.Any = None
    key: typing.Optional[str] = None
    sections: typing.List["Report"] = dataclasses.field(default_factory=list)

    def json_payload(self) -> typing.Any:
        if self.data is not None:
            payload = self.data
        else:
            payload = [dict(zip(self.headers, row)) for row in self.rows]
        if not self.sections:
            return payload
        result = {self.key or "results": payload}
        for section in self.sections:
            result[section.key or section.title] = section.json_payload()
        return result


class ReportFormatter:
    def format(self, report: Report) -> str:
        parts = [self.format_table(report)]
        for section in report.sections:
            parts.append(self.format_title(section.title) + self.format(section))
        return "\n\n".join(parts)

    def format_title(self, title: str) -> str:
        return title + "\n"

    def format_table(self, report: Report) -> str:
        raise NotImplementedError


class TextFormatter(ReportFormatter):
    """Aligned columns, like the tables of the dimension counts."""

    def __init__(self, separator: str = "  ") -> None:
        self.separator = separator

    def format_table(self, report: Report) -> str:
        if report.text is not None:
            return report.text
        cells = [[str(h) for h in report.headers]] + [
            [str(c) for c in row] for row in report.rows
        ]
        if not cells[0]:
            cells = cells[1:]
        if not cells:
            return ""
        widths = [max(len(row[k]) for row in cells) for k in range(len(cells[0]))]
        return "\n".join(
            self.separator.join(c.rjust(w) for c, w in zip(row, widths)).rstrip()
            for row in cells
        )


class CsvFormatter(ReportFormatter):
    def format_title(self, title: str) -> str:
        return "# " + title + "\n"

    def format_table(self, report: Report) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if report.headers:
            writer.writerow(report.headers)
        writer.writerows(report.rows)
        return buffer.getvalue().rstrip("\n")


class JsonFormatter(ReportFormatter):
    def __init__(self, indent: typing.Optional[int] = 2) -> None:
        self.indent = indent

    def format(self, report: Report) -> str:
        return json.dumps(report.json_payload(), indent=self.indent, sort_keys=True)


class JsonLogFormatter(jsonlogger.JsonFormatter):
    """JSON log records with ``status`` and ``logger.name`` fields."""

    def __init__(self) -> None:
        super(JsonLogFormatter, self).__init__(timestamp=True)

    def add_fields(
        self,
        log_record: typing.Dict[str, typing.Any],
        record: logging.LogRecord,
        message_dict: typing.Dict[str, str],
    ) -> None:
        super(JsonLogFormatter, self).add_fields(log_record, record, message_dict)
        log_record["status"] = record.levelname.lower()
        log_record["logger"] = {
            "name": record.name,
        }
        if record.exc_info and record.exc_info[0]:
            log_record["error"] = {
                "kind": record.exc_info[0].__name__,
                "message": message_dict.get("exc_info"),
            }
            log_record.pop("exc_info", None)


TEXT_FORMATTER = TextFormatter()
CSV_FORMATTER = CsvFormatter()
JSON_FORMATTER = JsonFormatter()
JSON_LOG_FORMATTER = JsonLogFormatter()

preconfigured: typing.Dict[str, ReportFormatter] = {
    "text": TEXT_FORMATTER,
    "csv": CSV_FORMATTER,
    "json": JSON_FORMATTER,
}

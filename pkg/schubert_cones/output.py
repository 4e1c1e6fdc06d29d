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
import sys
import typing

from schubert_cones import formatter


class Output:
    """Generic report output."""

    def __init__(
        self,
        stream: typing.TextIO,
        formatter: formatter.ReportFormatter = formatter.TEXT_FORMATTER,
    ):
        self.stream = stream
        self.formatter = formatter

    def write(self, report: formatter.Report) -> None:
        text = self.formatter.format(report)
        self.stream.write(text)
        if not text.endswith("\n"):
            self.stream.write("\n")
        self.stream.flush()


class Stream(Output):
    """Output to a stream, stdout by default."""

    def __init__(
        self,
        stream: typing.Optional[typing.TextIO] = None,
        formatter: formatter.ReportFormatter = formatter.TEXT_FORMATTER,
    ):
        super(Stream, self).__init__(
            sys.stdout if stream is None else stream, formatter
        )


class File(Output):
    """Output to a file, truncated on open."""

    def __init__(
        self,
        filename: str,
        formatter: formatter.ReportFormatter = formatter.TEXT_FORMATTER,
    ):
        self.filename = filename
        super(File, self).__init__(open(filename, "w", encoding="utf-8"), formatter)

    def close(self) -> None:
        self.stream.close()

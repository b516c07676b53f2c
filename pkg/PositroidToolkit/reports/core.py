from typing import Any, Dict, List, Optional, Sequence

import json

import markdown2 as md2

PARAGRAPH = "paragraph"
TABLE = "table"


class ReportElement:
    """
    One block of a report: a paragraph of text or a table.

    Attributes:
        element_type (str): 'paragraph' or 'table'.
        text (Optional[str]): The paragraph text.
        headers (List[str]): Column names of a table.
        rows (List[List[str]]): Table rows, already formatted as strings.
    """

    def __init__(self,
                 element_type: str,
                 text: Optional[str] = None,
                 headers: Optional[Sequence[str]] = None,
                 rows: Optional[Sequence[Sequence[Any]]] = None):
        self.element_type = element_type
        self.text = text
        self.headers = list(headers) if headers is not None else []
        self.rows = [[str(x) for x in row] for row in rows] if rows is not None else []

    @staticmethod
    def paragraph(text: str) -> 'ReportElement':
        return ReportElement(PARAGRAPH, text=text)

    @staticmethod
    def table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> 'ReportElement':
        return ReportElement(TABLE, headers=headers, rows=rows)

    def to_json(self) -> Dict[str, Any]:
        return {"type": self.element_type, "text": self.text, "headers": self.headers, "rows": self.rows}

    def to_markdown(self) -> str:
        if self.element_type == PARAGRAPH:
            return f"{self.text}\n\n" if self.text else ''
        if self.element_type == TABLE:
            lines = ["| " + " | ".join(self.headers) + " |",
                     "|" + "|".join("---" for _ in self.headers) + "|"]
            lines += ["| " + " | ".join(row) + " |" for row in self.rows]
            return "\n".join(lines) + "\n\n"
        return ''

    def to_text(self) -> str:
        """Plain text: the paragraph, or the table with columns padded to a common width."""
        if self.element_type == PARAGRAPH:
            return self.text or ''
        widths = [max([len(h)] + [len(row[i]) for row in self.rows]) for i, h in enumerate(self.headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(self.headers, widths)).rstrip()]
        lines += ["  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip() for row in self.rows]
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"ReportElement(element_type={self.element_type!r}, rows={len(self.rows)})"


class ReportSection:
    """
    A titled part of a report.

    Attributes:
        title (str): The title of the section.
        content (List[ReportElement]): Paragraphs and tables, in order.
    """

    def __init__(self, title: str):
        self.title = title
        self.content: List[ReportElement] = []

    def add_content(self, element: ReportElement) -> 'ReportSection':
        self.content.append(element)
        return self

    def to_json(self) -> Dict[str, Any]:
        return {"title": self.title, "content": [elem.to_json() for elem in self.content]}

    def to_markdown(self, level: int = 2) -> str:
        md = f"{'#' * level} {self.title}\n\n"
        for elem in self.content:
            md += elem.to_markdown()
        return md

    def __repr__(self) -> str:
        return f"ReportSection(title={self.title!r}, content={len(self.content)} elements)"


class Report:
    """
    Result of a command: titled sections followed by a machine-readable summary.

    The plain-text rendering always ends with the line ``summary: key=value ...``, keys in
    insertion order.

    Attributes:
        title (str): Heading of the report.
        sections (List[ReportSection]): The sections, in order.
        summary (Dict[str, Any]): Values for the summary line.
    """

    def __init__(self, title: str, summary: Optional[Dict[str, Any]] = None):
        self.title = title
        self.sections: List[ReportSection] = []
        self.summary: Dict[str, Any] = dict(summary) if summary is not None else {}

    def add_section(self, section: ReportSection) -> ReportSection:
        self.sections.append(section)
        return section

    def section(self, title: str) -> ReportSection:
        """Appends a new empty section and returns it."""
        return self.add_section(ReportSection(title))

    def summary_line(self) -> str:
        return "summary: " + " ".join(f"{key}={_summary_value(value)}" for key, value in self.summary.items())

    def to_text(self) -> str:
        blocks = [self.title]
        for section in self.sections:
            body = "\n".join(elem.to_text() for elem in section.content)
            blocks.append(f"{section.title}\n{body}" if body else section.title)
        blocks.append(self.summary_line())
        return "\n\n".join(blocks) + "\n"

    def to_markdown(self) -> str:
        md = f"# {self.title}\n\n"
        md += ''.join(section.to_markdown() for section in self.sections)
        md += f"`{self.summary_line()}`\n"
        return md

    def to_html(self) -> str:
        return md2.markdown(self.to_markdown(), extras=["tables"])

    def to_json(self) -> Dict[str, Any]:
        return {"title": self.title,
                "sections": [section.to_json() for section in self.sections],
                "summary": {key: _summary_value(value) for key, value in self.summary.items()}}

    def save_as_json(self, filename: str) -> None:
        with open(filename, 'w') as f:
            json.dump(self.to_json(), f, indent=2)

    def save_as_html(self, filename: str) -> None:
        with open(filename, 'w') as f:
            f.write(self.to_html())

    @staticmethod
    def from_json(json_data: Dict[str, Any]) -> 'Report':
        report = Report(json_data['title'], json_data.get('summary', {}))
        for section_data in json_data.get('sections', []):
            section = report.section(section_data['title'])
            for content_data in section_data['content']:
                section.add_content(ReportElement(content_data['type'], text=content_data.get('text'),
                                                  headers=content_data.get('headers'),
                                                  rows=content_data.get('rows')))
        return report

    @staticmethod
    def load_from_json(filename: str) -> 'Report':
        with open(filename, 'r') as f:
            return Report.from_json(json.load(f))

    def __repr__(self) -> str:
        return f"Report(title={self.title!r}, sections={len(self.sections)})"


def _summary_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(str(x) for x in value)
    return str(value)

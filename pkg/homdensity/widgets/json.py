import json

from homdensity import formats
from .base import Widget


class JSON(Widget):
    """
    :param single:
        Render exactly one record as a JSON object instead of a list of objects.
    """

    def __init__(self, *columns, single=False, indent=None):
        super(JSON, self).__init__(*columns)
        self.single = single
        self.indent = indent

    def transform(self, records):
        columns = self.select_columns(records)
        rows = [{column: formats.json_value(record.get(column)) for column in columns} for record in records]
        return json.dumps(rows[0] if self.single else rows, indent=self.indent)

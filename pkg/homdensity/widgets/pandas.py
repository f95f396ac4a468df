import pandas as pd

from homdensity import formats
from .base import Widget


class Pandas(Widget):
    def transform(self, records, use_raw_values=False):
        """
        Builds a data frame with one row per record and every value formatted for display.

        :param records:
        :param use_raw_values:
            Don't round durations.
        """
        columns = self.select_columns(records)
        return pd.DataFrame(
            [
                [formats.display_value(record.get(column), use_raw_value=use_raw_values) for column in columns]
                for record in records
            ],
            columns=pd.Index(columns),
            dtype=object,
        )


class Table(Pandas):
    def transform(self, records, use_raw_values=False):
        data_frame = super(Table, self).transform(records, use_raw_values=use_raw_values)
        return data_frame.to_string(index=False)

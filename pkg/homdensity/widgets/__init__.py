from .base import Widget
from .csv import CSV
from .json import JSON
from .pandas import Pandas, Table

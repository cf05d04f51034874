from .report_generator import ReportGenerator

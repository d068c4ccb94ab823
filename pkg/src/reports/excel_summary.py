"""
Excel Summary Generator Module
Counts per parity and partition class of a generated table, using openpyxl
"""
import logging
import os
from datetime import datetime
from typing import Any, Dict

try:
    from openpyxl import Workbook
    from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
    from openpyxl.utils import get_column_letter
    OPENPYXL_AVAILABLE = True
except ImportError:
    OPENPYXL_AVAILABLE = False

logger = logging.getLogger(__name__)

_THIN = Side(style='thin') if OPENPYXL_AVAILABLE else None


class ExcelSummaryGenerator:
    """Writes the table summary workbook"""

    def __init__(self, output_dir: str):
        self.output_dir = output_dir

    def _style_headers(self, ws, row: int, end_col: int):
        header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
        header_font = Font(color="FFFFFF", bold=True)
        border = Border(left=_THIN, right=_THIN, top=_THIN, bottom=_THIN)

        for col in range(1, end_col + 1):
            cell = ws.cell(row=row, column=col)
            cell.fill = header_fill
            cell.font = header_font
            cell.alignment = Alignment(horizontal='center', vertical='center')
            cell.border = border

    def _auto_adjust_columns(self, ws):
        for column in ws.columns:
            width = max(len(str(cell.value)) if cell.value is not None else 0 for cell in column)
            ws.column_dimensions[get_column_letter(column[0].column)].width = min(width + 2, 50)

    def generate_summary(self, config, result: Dict[str, Any]) -> Dict[str, Any]:
        """Summary sheet with class counts and zero counts per parity"""
        if not OPENPYXL_AVAILABLE:
            return {'success': False, 'error': 'openpyxl is required for Excel summaries'}

        try:
            wb = Workbook()
            ws = wb.active
            ws.title = "Resumo"

            ws['A1'] = f"Tabela 6-j {config.mode.value} até spin {config.max_spin}"
            ws['A1'].font = Font(size=16, bold=True)
            ws['A2'] = f"Gerado em: {datetime.now().strftime('%d/%m/%Y %H:%M:%S')}"
            ws['A2'].font = Font(size=10, italic=True)
            ws['A3'] = f"Total de símbolos: {result['lines']}"

            headers = ['Paridade', 'Classe', 'Símbolos']
            start_row = 5
            for col, header in enumerate(headers, 1):
                ws.cell(row=start_row, column=col, value=header)
            self._style_headers(ws, start_row, len(headers))

            row = start_row
            for (parity, tag), count in sorted(result['counts'].items()):
                row += 1
                ws.cell(row=row, column=1, value=parity)
                ws.cell(row=row, column=2, value=tag)
                ws.cell(row=row, column=3, value=count)

            zeros = wb.create_sheet("Zeros")
            for col, header in enumerate(['Paridade', 'Valores nulos'], 1):
                zeros.cell(row=1, column=col, value=header)
            self._style_headers(zeros, 1, 2)
            for row, (parity, count) in enumerate(sorted(result['zeros'].items()), 2):
                zeros.cell(row=row, column=1, value=parity)
                zeros.cell(row=row, column=2, value=count)

            self._auto_adjust_columns(ws)
            self._auto_adjust_columns(zeros)
            filepath = self._save_workbook(wb, f"{config.mode.value}resumo")
            return {'success': True, 'filepath': filepath}

        except Exception as e:
            logger.error(f"Error generating Excel summary: {e}")
            return {'success': False, 'error': str(e)}

    def _save_workbook(self, wb, prefix: str) -> str:
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        filepath = os.path.join(self.output_dir, f"{prefix}_{timestamp}.xlsx")
        wb.save(filepath)
        logger.info(f"Excel summary saved: {filepath}")
        return filepath

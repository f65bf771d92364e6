#include "table.h"

int grid_store(struct table *grid, unsigned int cell, int v)
{
	if (!table_valid(grid))
		return -1;
	grid->cells[cell] = v;
	return 0;
}

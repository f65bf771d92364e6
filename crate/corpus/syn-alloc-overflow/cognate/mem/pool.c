#include <stdlib.h>
#include "item.h"

struct item *pool_grow(struct pool *pool, size_t count)
{
	struct item *items;

	items = malloc(count * sizeof(struct item));
	if (items == NULL)
		return NULL;
	pool->items = items;
	pool->cap = count;
	return items;
}

#include <stdint.h>
#include <stdlib.h>
#include "item.h"

struct item *alloc_items(size_t n)
{
	struct item *p;

	if (n > SIZE_MAX / sizeof(struct item))
		return NULL;
	p = malloc(n * sizeof(struct item));
	if (p == NULL)
		return NULL;
	memset(p, 0, n * sizeof(struct item));
	return p;
}

void free_items(struct item *p)
{
	free(p);
}

/*
 * Code generation for SELECT statements.
 */
#include "sqlInt.h"

typedef struct SortCtx SortCtx;

static int
select_column_count(struct Select *p)
{
	int n = 0;
	for (; p != NULL; p = p->pPrior)
		n += p->pEList->nExpr;
	return n;
}

int
sqlSelect(struct Parse *pParse,
	  struct Select *p,
	  struct SelectDest *pDest)
{
	int i, j;
	struct WhereInfo *pWInfo;
	struct Vdbe *v;
	int isAgg;
	struct ExprList *pEList = 0;
	struct SrcList *pTabList;
	struct Expr *pWhere;
	struct ExprList *pGroupBy;
	struct Expr *pHaving;
	int rc = 1;
	struct DistinctCtx sDistinct;
	SortCtx sSort;

	v = sqlGetVdbe(pParse);
	if (p == NULL || pParse->is_aborted)
		return 1;
	memset(&sSort, 0, sizeof(sSort));
	sSort.pOrderBy = p->pOrderBy;
	pTabList = p->pSrc;
	pEList = p->pEList;
	pWhere = p->pWhere;
	pGroupBy = p->pGroupBy;
	pHaving = p->pHaving;
	sDistinct.isTnct = (p->selFlags & SF_Distinct) != 0;
	isAgg = (p->selFlags & SF_Aggregate) != 0;

	/*
	 * Transform a DISTINCT query into a GROUP BY when the result
	 * set and the ORDER BY are the same.
	 */
	if ((p->selFlags & (SF_Distinct | SF_Aggregate)) == SF_Distinct
	    && sqlExprListCompare(sSort.pOrderBy, pEList, -1) == 0) {
		p->selFlags &= ~SF_Distinct;
		pGroupBy = sql_expr_list_dup(pEList, 0);
		p->pGroupBy = pGroupBy;
		p->selFlags |= SF_Aggregate;
		assert(sDistinct.isTnct);
	}

	if (sSort.pOrderBy != NULL)
		sSort.iECursor = pParse->nTab++;
	else
		sSort.iECursor = -1;
	for (i = 0, j = 0; i < pEList->nExpr; i++) {
		if (pEList->a[i].pExpr == NULL)
			j++;
	}
	pWInfo = sqlWhereBegin(pParse, pTabList, pWhere, sSort.pOrderBy, p->pEList, 0, 0);
	if (pWInfo == NULL)
		goto select_end;
	sqlWhereEnd(pWInfo);
	rc = pParse->is_aborted + j;
select_end:
	sql_expr_list_delete(pGroupBy);
	return rc;
}
